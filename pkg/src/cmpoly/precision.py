"""Precision estimates, height and storage metrics, and the benchmark report."""
import json
import time
from dataclasses import asdict, dataclass
from math import log, log2, pi, sqrt

from . import _accel
from .errors import CmPolyError, UnsupportedFamily
from .family import Family
from .forms import check_discriminant, class_number

LN2 = log(2)
LN10 = log(10)


def hilbert_sum(D):
    """Sum of 1/a over the reduced forms (a, b, c) of discriminant -D."""
    check_discriminant(D)
    return _accel.hilbert_sum(D)


def hilbert_estimate(D):
    """(pi sqrt(D) / ln 2) * sum 1/a, the size of the Hilbert polynomial in bits."""
    return pi * sqrt(D) / LN2 * hilbert_sum(D)


def h_prec(D):
    h = class_number(D)
    return LN10 / LN2 * (h / 4 + 5) + hilbert_estimate(D)


def h_prec1(D):
    return 33 + hilbert_estimate(D)


def family_ratio(D, family):
    kind = family.kind
    if kind == "hilbert":
        return 1.0
    if kind == "weber":
        return 1 / 8 if D % 3 == 0 else 1 / 24
    if kind == "eta":
        l, = family.params
        return 1 / (l + 1)
    if kind == "eta2":
        p1, p2 = family.params
        return (p1 - 1) * (p2 - 1) / (12 * (p1 + 1) * (p2 + 1))
    if kind == "ramanujan":
        return 1 / 36
    raise UnsupportedFamily(f"no precision ratio for {family}")


def family_prec(D, family):
    """Estimated bits needed for the class polynomial of the given family."""
    if isinstance(family, str):
        family = Family.parse(family)
    return family_ratio(D, family) * hilbert_estimate(D)


def working_precision(D, family, guard=64):
    return int(family_prec(D, family) * 1.1) + guard


def log_height(poly):
    coeffs = getattr(poly, "coeffs", poly)
    nz = [abs(a) for a in coeffs if a]
    return max(log2(a) for a in nz) if nz else 0.0


def storage_bits(poly):
    coeffs = getattr(poly, "coeffs", poly)
    return sum(max(abs(a).bit_length(), 1) for a in coeffs)


@dataclass
class PrecisionProfile:
    D: int
    family: str
    degree: int
    estimated_bits: float
    measured_height: float = None
    storage_bits: int = None
    millis: float = None
    error: str = None

    def to_json(self):
        return json.dumps(asdict(self), sort_keys=False)


def bench_report(Ds, families, mode="estimate", max_h=None):
    """One PrecisionProfile per (D, family); errors are recorded per row."""
    from .classpoly import build

    if mode not in ("estimate", "construct"):
        raise ValueError(f"mode must be estimate or construct, not {mode!r}")
    families = [Family.parse(f) if isinstance(f, str) else f for f in families]
    rows = []
    for D in Ds:
        if not families:
            break
        try:
            h = class_number(D)
        except CmPolyError as e:
            rows.extend(PrecisionProfile(D, f.tag, 0, 0.0, error=f"{type(e).__name__}: {e}")
                        for f in families)
            continue
        for fam in families:
            degree = 3 * h if fam.kind == "weber" else h
            row = PrecisionProfile(D, fam.tag, degree, family_prec(D, fam))
            if mode == "construct":
                if max_h is not None and h > max_h:
                    row.error = f"h={h} above cap {max_h}"
                else:
                    t0 = time.perf_counter()
                    try:
                        poly = build(fam, D)
                    except CmPolyError as e:
                        row.error = f"{type(e).__name__}: {e}"
                    else:
                        row.measured_height = log_height(poly)
                        row.storage_bits = storage_bits(poly)
                    row.millis = (time.perf_counter() - t0) * 1000
            rows.append(row)
    return rows


def format_table(rows):
    head = f"{'D':>12} {'family':>10} {'deg':>6} {'est_bits':>10} {'height':>9} {'storage':>8} {'ms':>9}  error"
    lines = [head]

    def cell(v, width, spec=""):
        return f"{'-':>{width}}" if v is None else f"{v:>{width}{spec}}"
    for r in rows:
        lines.append(f"{r.D:>12} {r.family:>10} {r.degree:>6} {r.estimated_bits:>10.1f} "
                     f"{cell(r.measured_height, 9, '.2f')} {cell(r.storage_bits, 8)} "
                     f"{cell(r.millis, 9, '.1f')}  {r.error or ''}".rstrip())
    return "\n".join(lines)


def savings(D, family, reference="ramanujan"):
    """Relative precision saved by the reference family against another family."""
    ref = Family.parse(reference) if isinstance(reference, str) else reference
    fam = Family.parse(family) if isinstance(family, str) else family
    return 1 - family_ratio(D, ref) / family_ratio(D, fam)
