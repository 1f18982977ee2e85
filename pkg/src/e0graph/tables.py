"""Reference valency distributions for the small groups, frozen as text.

The dotted notation ``v^k`` means k involutions of valency v, matching the
renderer in :mod:`e0graph.graph`.  The final two entries of the A6 row run
together in the source listing ("59^{10}115^6"); they are stored here
disambiguated as 59^10.115^6, a reading cross-checked by the counts summing
to |I(Sym(7))| = 231.  The verification report surfaces any residual
mismatch on that row instead of suppressing it.
"""

from __future__ import annotations

import re

from .graph import ValencyDistribution

TYPE_A_ROWS = {
    "A3": "0^1.1^3.2^1.3^1.4^3",
    "A4": "0^1.1^4.2^2.3^6.4^3.6^3.7^2.12^4",
    "A5": "0^1.1^5.2^3.3^13.4^7.5^2.7^15.8^1.9^8.10^1.13^4.15^1.19^9.37^5",
    "A6": "0^1.1^6.2^4.3^23.4^9.5^6.6^9.7^22.8^4.9^27.10^4.11^10.12^7.13^8."
          "14^2.15^10.16^3.19^12.21^4.22^12.24^2.25^5.27^8.29^2.31^4.39^2."
          "41^5.55^4.59^10.115^6",
}

EXCEPTIONAL_ROWS = {
    "H3": "0^1.1^3.2^4.3^5.4^4.5^5.7^2.8^2.9^2.15^3",
    "H4": "0^1.1^4.2^8.3^12.4^23.5^23.6^27.7^26.8^38.9^24.10^19.11^23.12^25."
          "13^22.14^30.15^30.16^16.17^14.18^18.19^12.20^7.21^15.22^10.23^5."
          "24^11.25^8.26^5.27^8.28^7.29^3.30^5.31^6.32^4.33^5.34^3.35^2."
          "36^3.37^1.38^2.39^3.40^1.42^3.43^4.44^1.45^2.46^2.47^2.48^2."
          "49^1.50^5.51^1.54^3.55^1.59^1.61^2.62^3.63^1.65^2.70^1.71^1."
          "79^1.81^1.82^1.83^1.87^2.89^2.97^2.99^1.119^1.122^1.137^2."
          "143^3.173^2.285^4",
    "F4": "0^1.1^4.2^8.3^9.4^17.5^11.6^9.7^9.8^10.9^13.10^2.11^6.12^4.13^4."
          "14^4.15^2.17^4.18^1.19^2.21^2.23^2.25^2.29^2.30^2.34^3.37^2.69^4",
    "E6": "0^1.1^6.2^14.3^34.4^35.5^33.6^15.7^56.8^30.9^58.10^25.11^52.12^17."
          "13^28.14^19.15^25.16^25.17^24.18^11.19^40.20^15.21^16.22^5.23^9."
          "24^12.25^13.26^13.27^18.28^14.29^7.30^11.31^6.32^4.33^14.35^3."
          "36^2.37^11.38^12.39^6.40^2.41^6.43^13.44^9.45^5.46^7.47^7.49^1."
          "50^2.51^2.53^2.54^4.56^2.58^2.59^4.62^2.68^3.69^1.70^2.71^2."
          "72^4.73^2.74^2.75^1.77^4.80^2.82^10.89^9.91^1.95^2.118^6.137^1."
          "141^2.155^7.171^5.227^10.445^6",
}

A6_NOTE = ("A6 tail disambiguated from the run-together source entry "
           "59^{10}115^6 as 59^10.115^6; counts sum to 231 = |I(Sym(7))|")

_TERM_RE = re.compile(r"^(\d+)\^\{?(\d+)\}?$")


def parse_distribution(text):
    """Parse a dotted distribution string into a ValencyDistribution."""
    pairs = []
    for term in text.strip().split("."):
        m = _TERM_RE.match(term.strip())
        if m is None:
            raise ValueError(f"cannot parse distribution term {term!r}")
        pairs.append((int(m.group(1)), int(m.group(2))))
    return ValencyDistribution.from_pairs(pairs)


def expected_distribution(label):
    """The reference distribution for a tabulated group label."""
    text = TYPE_A_ROWS.get(label) or EXCEPTIONAL_ROWS.get(label)
    if text is None:
        raise KeyError(f"no tabulated distribution for {label}")
    return parse_distribution(text)


def dihedral_distribution(m):
    """The I2(m) distribution 0^1.1^2.2^2...floor(m/2)^2 for m >= 3."""
    if m < 3:
        raise ValueError("need m >= 3")
    return ValencyDistribution.from_pairs(
        [(0, 1)] + [(v, 2) for v in range(1, m // 2 + 1)]
    )
