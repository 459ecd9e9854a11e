"""JSON certificate documents, one per (n, p).

Integers are written as decimal strings so arbitrary precision survives any
JSON reader; coefficient lists are ascending-degree (constant term first).
Output is canonical: sorted keys, fixed indentation, no timestamps.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

from . import __version__
from .cyclo import CycloElt, cyclo_ring, cyclotomic_poly
from .ideal import FracElt, IdealLattice, InvertibilityCertificate, ideal_norm
from .verify import (
    PrimeReport,
    RamifiedCertificate,
    UnramifiedCertificate,
    VerificationReport,
    associates_check,
    check_unramified_certificate,
    dedekind_maximality,
    verify_ramified_certificate,
)
from .zxpoly import ZPoly

SCHEMA_VERSION = "1"
COEFFICIENT_ORDER = "ascending degree, constant term first"
SEED_NOTE = (
    "factorization output is canonically ordered; the SEED variable only "
    "changes internal random choices, never the certificate"
)

_TEXT_KEYS = {"schema_version", "tool_version", "case", "coefficient_order", "seed_note", "failures"}


@dataclass
class CertificateDocument:
    n_input: int
    n: int
    p: int
    case: str
    phi_n: list
    splitting: list
    witnesses: dict
    checks: dict
    verdict: bool
    failures: list = field(default_factory=list)
    schema_version: str = SCHEMA_VERSION
    tool_version: str = __version__
    coefficient_order: str = COEFFICIENT_ORDER
    seed_note: str = SEED_NOTE


def _encode(value):
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, dict):
        return {k: _encode(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_encode(v) for v in value]
    return value


def _decode(value, key=None):
    if isinstance(value, dict):
        return {k: _decode(v, k) for k, v in value.items()}
    if isinstance(value, list):
        return [_decode(v, key) for v in value]
    if isinstance(value, str) and key not in _TEXT_KEYS:
        return int(value)
    return value


def to_json_obj(doc: CertificateDocument) -> dict:
    return _encode(asdict(doc))


def from_json_obj(obj: dict) -> CertificateDocument:
    return CertificateDocument(**_decode(obj))


def emit(doc: CertificateDocument) -> str:
    return json.dumps(to_json_obj(doc), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def parse(text: str) -> CertificateDocument:
    return from_json_obj(json.loads(text))


def emit_many(docs) -> str:
    return json.dumps([to_json_obj(d) for d in docs], sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def parse_many(text: str) -> list[CertificateDocument]:
    data = json.loads(text)
    if isinstance(data, dict):
        data = [data]
    return [from_json_obj(obj) for obj in data]


def _elt(e: CycloElt) -> list:
    return list(e.coeffs)


def _frac(b: FracElt) -> dict:
    return {"num": _elt(b.num), "den": b.den}


def _invertibility_json(ic: InvertibilityCertificate) -> dict:
    return {
        "a": [_elt(a) for a in ic.a],
        "b": [_frac(b) for b in ic.b],
        "unit_index": ic.unit_index,
    }


def _ramified_json(cert: RamifiedCertificate) -> dict:
    return {
        "factor_index": cert.factor_index,
        "G": list(cert.G.coeffs),
        "H": list(cert.H.coeffs),
        "R": list(cert.R.coeffs),
        "U": list(cert.U.coeffs),
        "V": list(cert.V.coeffs),
        "T": list(cert.T.coeffs),
    }


def document_from_report(report: PrimeReport, n_input: int) -> CertificateDocument:
    data = report.splitting
    splitting = [
        {
            "factor": list(pf.g.coeffs),
            "e": pf.e,
            "f": pf.f,
            "ideal_hnf": [list(r) for r in pf.ideal.basis],
            "ideal_norm": ideal_norm(pf.ideal),
        }
        for pf in data.factors
    ]
    if data.case == "unramified":
        cert = report.unramified
        witnesses = {
            "invertibility": [_invertibility_json(ic) for ic in cert.invertibility],
            "local_generators": [_elt(s) for s in cert.local_generators],
        }
    else:
        witnesses = {
            "k": data.k,
            "q": data.q,
            "certificates": [_ramified_json(c) for c in report.ramified],
        }
    return CertificateDocument(
        n_input=n_input,
        n=data.n,
        p=data.p,
        case=data.case,
        phi_n=list(cyclotomic_poly(data.n).coeffs),
        splitting=splitting,
        witnesses=witnesses,
        checks={name: dict(v.checks) for name, v in report.verdicts.items()},
        verdict=report.ok,
        failures=report.failures(),
    )


def documents_from_report(report: VerificationReport) -> list[CertificateDocument]:
    return [document_from_report(r, report.n_input) for r in report.primes]


def _is_hnf(rows, m: int) -> bool:
    if len(rows) != m or any(len(r) != m for r in rows):
        return False
    for i, row in enumerate(rows):
        if row[i] <= 0 or any(row[:i]):
            return False
        if any(not 0 <= rows[j][i] < row[i] for j in range(i)):
            return False
    return True


def _ideal(ring, rows) -> IdealLattice:
    return IdealLattice(ring, rows)


def recheck_document(doc: CertificateDocument) -> dict[str, dict[str, bool]]:
    """Re-run every checker on the witness data stored in ``doc``.

    Nothing is rebuilt from scratch: ideals, witness polynomials and
    cofactors come from the document. The result has the same shape as
    ``doc.checks``.
    """
    ring = cyclo_ring(doc.n)
    malformed = {f"ideal_hnf[{i}]": False for i, s in enumerate(doc.splitting)
                 if not _is_hnf(s["ideal_hnf"], ring.degree)}
    if malformed:
        return {"document": malformed}
    ideals = [_ideal(ring, s["ideal_hnf"]) for s in doc.splitting]
    out = {}
    if doc.case == "unramified":
        w = doc.witnesses
        inv = []
        for P, ic in zip(ideals, w["invertibility"]):
            a = tuple(CycloElt(ring, x) for x in ic["a"])
            b = tuple(FracElt(CycloElt(ring, x["num"]), x["den"]) for x in ic["b"])
            inv.append(InvertibilityCertificate(P, P, a, b, ic["unit_index"]))
        cert = UnramifiedCertificate(
            doc.n,
            doc.p,
            tuple(ZPoly(s["factor"]) for s in doc.splitting),
            tuple(ideals),
            tuple(inv),
            tuple(CycloElt(ring, s) for s in w["local_generators"]),
        )
        out["unramified"] = check_unramified_certificate(cert).checks
        return out
    w = doc.witnesses
    for c in w["certificates"]:
        i = c["factor_index"]
        cert = RamifiedCertificate(
            doc.n, doc.p, w["k"], w["q"],
            *(ZPoly(c[name]) for name in "GHRUVT"),
            ideal=ideals[i] if 0 <= i < len(ideals) else ideals[0],
            factor_index=i,
        )
        out[f"ramified[{i}]"] = verify_ramified_certificate(cert).checks
        assoc = associates_check(cert)
        if assoc.applicable:
            out[f"associates[{i}]"] = assoc.checks
    out["dedekind"] = dedekind_maximality(doc.n, doc.p).checks
    return out


def document_verifies(doc: CertificateDocument) -> bool:
    rechecked = recheck_document(doc)
    return rechecked == doc.checks and all(all(c.values()) for c in rechecked.values())
