"""JSON-ready dictionaries for verdicts, certificates and triangles.

Rationals are always written as ``"num/den"`` strings, never floats, and
every ``*_to_dict`` has a ``*_from_dict`` inverse.
"""

from fractions import Fraction

from .bivariate import BiPoly
from .constructibility import SYMBOLIC, Verdict, Witness
from .geometry import TriangleInstance
from .interval import Interval
from .irreducibility import CandidateCheck, CertificateStep, RootSearchCertificate
from .polynomial import QPoly
from .rational import rat_parse, rat_to_decimal
from .roots import Isolation


def rat_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def poly_to_dict(p, var: str = "X", qvar: str = "q") -> dict:
    if isinstance(p, QPoly):
        return {"type": "QPoly", "coeffs": [rat_str(c) for c in p.coeffs], "text": p.render(var)}
    return {
        "type": "BiPoly",
        "coeffs": [[rat_str(c) for c in qc.coeffs] for qc in p.xcoeffs],
        "text": p.render(var, qvar),
    }


def poly_from_dict(d: dict):
    if d["type"] == "QPoly":
        return QPoly(rat_parse(c) for c in d["coeffs"])
    return BiPoly(QPoly(rat_parse(c) for c in row) for row in d["coeffs"])


def value_to_json(v):
    if v is None:
        return None
    if isinstance(v, Fraction):
        return rat_str(v)
    return poly_to_dict(v)


def value_from_json(v):
    if v is None:
        return None
    if isinstance(v, str):
        return rat_parse(v)
    return poly_from_dict(v)


def certificate_to_dict(cert: RootSearchCertificate) -> dict:
    return {
        "mode": cert.mode,
        "conclusion": cert.conclusion,
        "root": value_to_json(cert.root),
        "roots": [rat_str(r) for r in cert.roots],
        "candidates": [
            {"g": rat_str(c.g), "h": rat_str(c.h), "residual": value_to_json(c.residual)}
            for c in cert.candidates
        ],
        "steps": [
            {
                "tag": s.tag,
                "polynomials": [value_to_json(p) for p in s.polynomials],
                "residual": value_to_json(s.residual),
                "note": s.note,
            }
            for s in cert.narrative
        ],
    }


def certificate_from_dict(d: dict) -> RootSearchCertificate:
    return RootSearchCertificate(
        mode=d["mode"],
        candidates=tuple(
            CandidateCheck(rat_parse(c["g"]), rat_parse(c["h"]), value_from_json(c["residual"]))
            for c in d["candidates"]
        ),
        conclusion=d["conclusion"],
        narrative=tuple(
            CertificateStep(
                s["tag"],
                tuple(value_from_json(p) for p in s["polynomials"]),
                value_from_json(s["residual"]),
                s["note"],
            )
            for s in d["steps"]
        ),
        root=value_from_json(d["root"]),
        roots=tuple(rat_parse(r) for r in d["roots"]),
    )


def isolation_to_dict(iv: Isolation, digits: int = 12) -> dict:
    return {
        "lo": rat_str(iv.lo),
        "hi": rat_str(iv.hi),
        "decimal": rat_to_decimal(iv.midpoint, digits),
        "poly": poly_to_dict(iv.poly),
    }


def isolation_from_dict(d: dict) -> Isolation:
    return Isolation(rat_parse(d["lo"]), rat_parse(d["hi"]), poly_from_dict(d["poly"]))


def _witness_data(w: Witness) -> dict:
    if w.kind == "rational_root":
        return {"t": rat_str(w.root)}
    if w.kind == "quadratic":
        return {"quadratic": poly_to_dict(w.quadratic), "cofactor": poly_to_dict(w.cofactor)}
    return {"conclusion": w.certificate.conclusion, "candidates": len(w.certificate.candidates)}


def verdict_to_dict(v: Verdict, digits: int = 12) -> dict:
    """``{"verdict": ..., "certificate": ...}`` document for one verdict."""
    q_spec = SYMBOLIC if v.is_symbolic else rat_str(v.q_spec)
    return {
        "verdict": {
            "q_spec": q_spec,
            "degree": v.degree,
            "decision": v.decision,
            "witness": {"kind": v.witness.kind, "data": _witness_data(v.witness)},
            "root": None if v.root_box is None else isolation_to_dict(v.root_box, digits),
        },
        "certificate": None if v.witness.certificate is None else certificate_to_dict(v.witness.certificate),
    }


def verdict_from_dict(d: dict) -> Verdict:
    vd = d["verdict"]
    data = vd["witness"]["data"]
    kind = vd["witness"]["kind"]
    cert = None if d.get("certificate") is None else certificate_from_dict(d["certificate"])
    if kind == "rational_root":
        witness = Witness(kind, root=rat_parse(data["t"]), certificate=cert)
    elif kind == "quadratic":
        witness = Witness(kind, quadratic=poly_from_dict(data["quadratic"]),
                          cofactor=poly_from_dict(data["cofactor"]), certificate=cert)
    else:
        witness = Witness(kind, certificate=cert)
    q_spec = SYMBOLIC if vd["q_spec"] == SYMBOLIC else rat_parse(vd["q_spec"])
    root = None if vd["root"] is None else isolation_from_dict(vd["root"])
    return Verdict(q_spec, vd["degree"], vd["decision"], witness, root)


def _num_to_json(x, digits: int):
    if isinstance(x, Interval):
        return {"lo": rat_str(x.lo), "hi": rat_str(x.hi), "decimal": rat_to_decimal(x.mid, digits)}
    return rat_str(x)


def _num_from_json(x):
    if isinstance(x, dict):
        return Interval(rat_parse(x["lo"]), rat_parse(x["hi"]))
    return rat_parse(x)


_TRIANGLE_FIELDS = ("l", "b", "q_sq", "p_sq", "cos_theta", "cp_x")


def triangle_to_dict(inst: TriangleInstance, digits: int = 12) -> dict:
    return {name: _num_to_json(getattr(inst, name), digits) for name in _TRIANGLE_FIELDS}


def triangle_from_dict(d: dict) -> TriangleInstance:
    return TriangleInstance(**{name: _num_from_json(d[name]) for name in _TRIANGLE_FIELDS})
