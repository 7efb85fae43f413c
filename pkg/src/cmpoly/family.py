"""Class polynomial families and their textual tags."""
from dataclasses import dataclass

from .errors import UnsupportedFamily, UnsupportedPair

SINGLE_LEVELS = (3, 5, 7, 13)
DOUBLE_PAIRS = ((3, 13), (5, 7))


@dataclass(frozen=True)
class Family:
    kind: str
    params: tuple = ()

    @property
    def tag(self):
        if self.params:
            return "-".join(["eta"] + [str(p) for p in self.params])
        return self.kind

    def __str__(self):
        return self.tag

    @classmethod
    def parse(cls, tag):
        tag = tag.strip().lower()
        if tag in ("hilbert", "weber", "ramanujan"):
            return cls(tag)
        parts = tag.split("-")
        if parts[0] == "eta" and len(parts) in (2, 3):
            try:
                nums = [int(p) for p in parts[1:]]
            except ValueError:
                raise UnsupportedFamily(f"unknown family {tag!r}") from None
            if len(nums) == 1:
                return single_eta(nums[0])
            return double_eta(*nums)
        raise UnsupportedFamily(f"unknown family {tag!r}")


HILBERT = Family("hilbert")
WEBER = Family("weber")
RAMANUJAN = Family("ramanujan")


def single_eta(l):
    if l not in SINGLE_LEVELS:
        raise UnsupportedFamily(f"single eta level l={l} not in {SINGLE_LEVELS}")
    return Family("eta", (l,))


def double_eta(p1, p2):
    if (p1, p2) not in DOUBLE_PAIRS:
        raise UnsupportedPair(f"pair ({p1}, {p2}) not in {DOUBLE_PAIRS}")
    return Family("eta2", (p1, p2))


ALL_FAMILIES = (HILBERT, WEBER) + tuple(single_eta(l) for l in SINGLE_LEVELS) \
    + tuple(double_eta(*p) for p in DOUBLE_PAIRS) + (RAMANUJAN,)
