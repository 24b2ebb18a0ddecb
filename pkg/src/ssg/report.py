"""Full analysis report for one semigroup, as plain data or text."""
import json
import time

from .classify import classify
from .cosets import coset_partition_report, quotient, s_normal_subgroups
from .errors import PreconditionError
from .products import find_strong_decomposition
from .subgroups import ANY, IdentityPolicy, idempotents, subgroup_check

SCHEMA_VERSION = 1


def _group(S, g):
    return {"members": [S.labels[i] for i in g.members],
            "identity": S.labels[g.identity], "order": g.order}


def _labels(S, members):
    return [S.labels[i] for i in members]


def _parse_subset(S, text):
    """Element labels separated by ';', or by ',' when labels allow it."""
    if ";" in text:
        return [S.index_of(t.strip()) for t in text.split(";") if t.strip()]
    known = set(S.labels)
    out, cur = [], ""
    # labels such as [[0,1],[1,1]] hold commas themselves, so grow greedily
    for tok in text.split(","):
        cur = f"{cur},{tok}" if cur else tok.strip()
        if cur in known:
            out.append(S.index_of(cur))
            cur = ""
    if cur:
        raise PreconditionError(f"could not read element labels from {text!r}")
    return out


def build_report(S, policy=ANY, min_size=2, max_group_order=720, cosets=(), timing=False):
    """Plain-data report; deterministic unless timing is requested."""
    start = time.perf_counter()
    policy = IdentityPolicy.parse(policy)
    rep = classify(S, policy, min_size, max_group_order)
    out = {
        "schema_version": SCHEMA_VERSION,
        "semigroup": {
            "name": S.name,
            "size": S.size,
            "identity": None if S.identity is None else S.labels[S.identity],
            "zero": None if S.zero is None else S.labels[S.zero],
            "commutative": S.is_commutative,
        },
        "policy": policy.value,
        "min_subgroup_size": min_size,
        "max_group_order": max_group_order,
        "idempotents": _labels(S, idempotents(S)),
        "subgroups": [_group(S, g) for g in rep.subgroups],
    }
    cls = {"is_s_semigroup": rep.is_s_semigroup}
    if rep.is_s_semigroup:
        cls.update({
            "witness": _group(S, rep.witness),
            "s_commutative": rep.s_commutative,
            "s_weakly_commutative": rep.s_weakly_commutative,
            "s_cyclic": rep.s_cyclic,
            "s_weakly_cyclic": rep.s_weakly_cyclic,
            "lagrange_class": rep.lagrange_class,
            "lagrange_dividing": None if rep.lagrange_dividing is None else _group(S, rep.lagrange_dividing),
            "lagrange_non_dividing":
                None if rep.lagrange_non_dividing is None else _group(S, rep.lagrange_non_dividing),
            "is_p_sylow_semigroup": rep.is_p_sylow_semigroup,
            "is_cauchy_semigroup": rep.is_cauchy_semigroup,
            "is_s_simple": rep.is_s_simple,
            "hyper_witness": None if rep.hyper_witness is None else _labels(S, rep.hyper_witness),
            "is_pseudo_simple": rep.is_pseudo_simple,
            "is_s_maximal": rep.is_s_maximal,
        })
    out["classification"] = cls
    out["maximal_subgroups"] = [_group(S, g) for g in rep.maximal]
    out["largest_subgroups"] = [_group(S, g) for g in rep.largest]
    out["sylow"] = [{
        "prime": d.prime,
        "divides_order": d.divides_order,
        "s_p_sylow": [_group(S, g) for g in d.s_p_sylow_subgroups],
        "non_p_sylow": [_group(S, g) for g in d.non_p_sylow_subgroups],
    } for d in rep.sylow]
    out["cauchy"] = [{"element": S.labels[c.element], "order": c.order, "is_cauchy": c.is_cauchy}
                     for c in rep.cauchy]
    out["s_normal"] = [{"subgroup": _group(S, A), "quotient_size": len(quotient(S, A))}
                       for A in (s_normal_subgroups(S, policy, min_size, max_group_order)
                                 if rep.is_s_semigroup else [])]
    out["cosets"] = []
    for spec in cosets:
        members = _parse_subset(S, spec)
        A = subgroup_check(S, members)
        if A is None:
            raise PreconditionError(f"{spec!r} is not a subgroup of {S.name}")
        for side in ("left", "right"):
            r = coset_partition_report(S, A, side)
            out["cosets"].append({
                "subgroup": _group(S, A), "side": side,
                "classes": [_labels(S, c) for c in r.classes],
                "is_disjoint": r.is_disjoint, "covers": r.covers, "uniform": r.uniform,
                "class_sizes": list(r.class_sizes),
            })
    dec = find_strong_decomposition(S, policy) if S.identity is not None and rep.is_s_semigroup else None
    out["decomposition"] = None if dec is None else {
        "kind": dec.kind, "construction": dec.construction,
        "b_factor": _labels(S, dec.b_factor),
        "factors": [_labels(S, f) for f in dec.factors],
        "verified": dec.verified,
    }
    if timing:
        out["timing"] = {"seconds": round(time.perf_counter() - start, 6)}
    return out


def to_json(report):
    return json.dumps(report, indent=2, sort_keys=False) + "\n"


def _fmt_group(g):
    return "{" + ", ".join(g["members"]) + "}" + f" (identity {g['identity']}, order {g['order']})"


def to_text(report):
    sg = report["semigroup"]
    lines = [
        f"{sg['name']}: {sg['size']} elements, identity {sg['identity']}, zero {sg['zero']}",
        f"policy {report['policy']}, minimum subgroup size {report['min_subgroup_size']}",
        f"idempotents ({len(report['idempotents'])}): {', '.join(report['idempotents'])}",
        f"subgroups ({len(report['subgroups'])}):",
    ]
    lines += ["  " + _fmt_group(g) for g in report["subgroups"]]
    lines.append(f"maximal subgroups ({len(report['maximal_subgroups'])}):")
    lines += ["  " + _fmt_group(g) for g in report["maximal_subgroups"]]
    cls = report["classification"]
    lines.append("classification:")
    for key, val in cls.items():
        if isinstance(val, dict):
            val = _fmt_group(val)
        elif isinstance(val, list):
            val = "{" + ", ".join(val) + "}"
        lines.append(f"  {key}: {val}")
    for d in report["sylow"]:
        kind = "S-p-Sylow" if d["divides_order"] else "non-p-Sylow"
        groups = d["s_p_sylow"] if d["divides_order"] else d["non_p_sylow"]
        orders = sorted({g["order"] for g in groups})
        lines.append(f"p={d['prime']}: {len(groups)} {kind} subgroups, orders {orders}")
    flagged = [c["element"] for c in report["cauchy"] if c["is_cauchy"]]
    lines.append(f"Cauchy elements: {len(flagged)} of {len(report['cauchy'])} group elements")
    lines.append(f"S-normal subgroups: {len(report['s_normal'])}")
    for n in report["s_normal"]:
        lines.append(f"  {_fmt_group(n['subgroup'])}, quotient size {n['quotient_size']}")
    for cr in report["cosets"]:
        lines.append(f"{cr['side']} cosets of {_fmt_group(cr['subgroup'])}: sizes {cr['class_sizes']}, "
                     f"disjoint {cr['is_disjoint']}, covers {cr['covers']}")
    dec = report["decomposition"]
    if dec:
        lines.append(f"strong decomposition: B of size {len(dec['b_factor'])} times "
                     f"{len(dec['factors'])} maximal subgroup(s) ({dec['construction']})")
    if "timing" in report:
        lines.append(f"time: {report['timing']['seconds']:.3f}s")
    return "\n".join(lines) + "\n"
