"""Text cache of class polynomials.

File layout: one header line, then one decimal coefficient per line, constant
term first.  The header carries a sha256 over family, D and the coefficients.
"""
import hashlib
import os
import tempfile

from .errors import CacheError
from .family import Family

MAGIC = "cmpoly-poly-v1"


def checksum(family_tag, D, coeffs):
    h = hashlib.sha256()
    h.update(f"{family_tag}\n{D}\n".encode())
    h.update("\n".join(str(c) for c in coeffs).encode())
    return h.hexdigest()


def cache_path(directory, family, D):
    tag = family.tag if isinstance(family, Family) else family
    return os.path.join(directory, f"{tag}_{D}.poly")


def dumps(poly):
    tag = poly.family.tag
    head = f"{MAGIC} family={tag} D={poly.D} degree={poly.degree} " \
           f"sha256={checksum(tag, poly.D, poly.coeffs)}"
    return "\n".join([head] + [str(c) for c in poly.coeffs]) + "\n"


def loads(text):
    from .classpoly import ClassPolynomial
    lines = text.splitlines()
    if not lines or not lines[0].startswith(MAGIC + " "):
        raise CacheError("not a class polynomial cache file")
    try:
        fields = dict(item.split("=", 1) for item in lines[0].split()[1:])
        tag, D, degree, digest = fields["family"], int(fields["D"]), int(fields["degree"]), fields["sha256"]
        coeffs = tuple(int(line) for line in lines[1:] if line.strip())
    except (KeyError, ValueError) as e:
        raise CacheError(f"malformed cache file: {e}") from None
    if len(coeffs) != degree + 1:
        raise CacheError(f"expected {degree + 1} coefficients, found {len(coeffs)}")
    if checksum(tag, D, coeffs) != digest:
        raise CacheError("checksum mismatch")
    return ClassPolynomial(Family.parse(tag), D, coeffs)


def store(poly, directory):
    """Write atomically: temp file in the same directory, then rename."""
    os.makedirs(directory, exist_ok=True)
    path = cache_path(directory, poly.family, poly.D)
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=".poly")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(dumps(poly))
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return path


def load(path):
    try:
        with open(path) as fh:
            return loads(fh.read())
    except OSError as e:
        raise CacheError(f"cannot read {path}: {e}") from None


def load_or_build(family, D, directory, prec=None):
    from .classpoly import build
    if directory:
        path = cache_path(directory, family, D)
        if os.path.exists(path):
            poly = load(path)
            if poly.family != family or poly.D != D:
                raise CacheError(f"{path} holds {poly.family} D={poly.D}")
            return poly
    poly = build(family, D, prec)
    if directory:
        store(poly, directory)
    return poly
