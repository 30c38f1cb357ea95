"""Deterministic report assembly and serialization.

Reports are plain dicts built in a fixed order with no timestamps. JSON
output is canonical (sorted keys, fixed separators); integers whose magnitude
exceeds 53 bits are emitted as decimal strings so lossy JSON consumers cannot
corrupt them, and decode_ints restores exactly those on the way back in.
"""

from __future__ import annotations

import hashlib
import json

from . import __version__
from .bifindex import all_routes
from .classify import search_bounded_patterns, verdict
from .spectrum import Level, kernel_dim_excess, lambda_set, spectrum_at
from .system import SystemSpec

JS_SAFE_MAX = 2**53 - 1


def encode_ints(obj):
    """Recursively stringify integers beyond 53-bit magnitude."""
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, int):
        return str(obj) if abs(obj) > JS_SAFE_MAX else obj
    if isinstance(obj, list):
        return [encode_ints(v) for v in obj]
    if isinstance(obj, dict):
        return {k: encode_ints(v) for k, v in obj.items()}
    return obj


def decode_ints(obj):
    """Inverse of encode_ints: only strings that encode_ints could have produced."""
    if isinstance(obj, str):
        body = obj[1:] if obj.startswith("-") else obj
        if body.isdigit() and abs(int(obj)) > JS_SAFE_MAX:
            return int(obj)
        return obj
    if isinstance(obj, list):
        return [decode_ints(v) for v in obj]
    if isinstance(obj, dict):
        return {k: decode_ints(v) for k, v in obj.items()}
    return obj


def canonical_json(obj) -> str:
    return json.dumps(encode_ints(obj), sort_keys=True, indent=2)


def parse_report(text: str):
    return decode_ints(json.loads(text))


def spec_digest(spec: SystemSpec) -> str:
    payload = json.dumps(spec.to_obj(), sort_keys=True, separators=(",", ":"))
    return "sha256:" + hashlib.sha256(payload.encode()).hexdigest()


def _header(spec: SystemSpec) -> dict:
    c = spec.counts
    return {
        "tool": {"name": "spherebif", "version": __version__},
        "input": {"digest": spec_digest(spec), "spec": spec.to_obj()},
        "counts": {
            "n_minus": c.n_minus,
            "n_plus": c.n_plus,
            "n_minus0": c.n_minus0,
            "n_plus0": c.n_plus0,
        },
    }


def report_decompose(spec: SystemSpec, m_max: int) -> dict:
    from .reps import cumulative_decomp, harmonic_decomp

    report = _header(spec)
    report["decompositions"] = {
        "harmonic": {
            str(m): {str(j): c for j, c in harmonic_decomp(spec.N, m).items()}
            for m in range(m_max + 1)
        },
        "cumulative": {
            str(m): {str(j): c for j, c in cumulative_decomp(spec.N, m).items()}
            for m in range(m_max + 1)
        },
        "dimensions": {
            "harmonic": {str(m): harmonic_decomp(spec.N, m).total_dim for m in range(m_max + 1)},
            "cumulative": {str(m): cumulative_decomp(spec.N, m).total_dim for m in range(m_max + 1)},
        },
    }
    return report


def _levels_section(spec: SystemSpec, m_max: int) -> list[dict]:
    return [
        {
            "level": lv.label,
            "value": lv.value,
            "kernel_dim_excess": kernel_dim_excess(spec, lv),
        }
        for lv in lambda_set(spec, m_max)
    ]


def report_levels(spec: SystemSpec, m_max: int) -> dict:
    report = _header(spec)
    report["m_max"] = m_max
    report["levels"] = _levels_section(spec, m_max)
    return report


def report_spectrum(spec: SystemSpec, level: Level, m_max: int) -> dict:
    report = _header(spec)
    report["level"] = level.label
    report["lambda"] = str(level.value)
    report["spectrum"] = [e.to_obj() for e in spectrum_at(spec, level.value, m_max)]
    return report


def report_bif(spec: SystemSpec, level: Level) -> dict:
    report = _header(spec)
    report["index"] = all_routes(spec, level)
    return report


def report_search(spec: SystemSpec, mu_max: int) -> dict:
    report = _header(spec)
    report["search"] = {
        "mu_max": mu_max,
        "orbit_count": spec.orbits,
        "patterns": [p.to_obj() for p in search_bounded_patterns(spec, mu_max=mu_max)],
    }
    return report


def report_classify(spec: SystemSpec, m_max: int, mu_max: int) -> dict:
    report = _header(spec)
    report["m_max"] = m_max
    report["levels"] = _levels_section(spec, m_max)
    report["spectrum"] = {
        lv.label: [e.to_obj() for e in spectrum_at(spec, lv.value, m_max)]
        for lv in lambda_set(spec, m_max)
    }
    report["indices"] = [all_routes(spec, lv) for lv in lambda_set(spec, m_max)]
    report["verdicts"] = [verdict(spec, lv).to_obj() for lv in lambda_set(spec, m_max)]
    report["search"] = {
        "mu_max": mu_max,
        "orbit_count": spec.orbits,
        "patterns": [p.to_obj() for p in search_bounded_patterns(spec, mu_max=mu_max)],
    }
    return report


# ---------------------------------------------------------------------------
# Text rendering
# ---------------------------------------------------------------------------

def _render_element(obj: dict) -> str:
    parts = [f"so2={obj['so2']}"]
    parts += [f"Z{l}={v}" for l, v in sorted(obj["z"].items(), key=lambda kv: int(kv[0]))]
    return "(" + ", ".join(parts) + ")"


def _render_pattern(obj: dict) -> str:
    body = [f"alpha0={obj['alpha0']}"]
    body += [f"alpha[{lbl}]={c}" for lbl, c in sorted(obj["alpha"].items(), key=_label_key)]
    return "{" + ", ".join(body) + f"}} (mu={obj['mu']})"


def _label_key(item) -> tuple:
    label = item[0] if isinstance(item, tuple) else item
    if label == "0":
        return (0, 0)
    return (int(label), 0)


def render_text(report: dict) -> str:
    lines = []
    if "tool" in report:
        tool = report["tool"]
        lines.append(f"{tool['name']} {tool['version']}")
        lines.append(f"input digest: {report['input']['digest']}")
        spec = report["input"]["spec"]
        lines.append(
            f"system: N={spec['N']} p={len(spec['a'])} a={spec['a']} b={spec['b']} orbits={spec['orbits']}"
        )
        c = report["counts"]
        lines.append(
            f"counts: n-={c['n_minus']} n+={c['n_plus']} n-0={c['n_minus0']} n+0={c['n_plus0']}"
        )

    if "decompositions" in report:
        d = report["decompositions"]
        lines.append("harmonic multiplicities k(m, j):")
        for m in sorted(d["harmonic"], key=int):
            row = " ".join(f"{j}:{v}" for j, v in sorted(d["harmonic"][m].items(), key=lambda kv: int(kv[0])))
            lines.append(f"  m={m} dim={d['dimensions']['harmonic'][m]}  {row}")
        lines.append("cumulative multiplicities r(m, l):")
        for m in sorted(d["cumulative"], key=int):
            row = " ".join(f"{l}:{v}" for l, v in sorted(d["cumulative"][m].items(), key=lambda kv: int(kv[0])))
            lines.append(f"  m={m} dim={d['dimensions']['cumulative'][m]}  {row}")

    if "levels" in report:
        lines.append(f"candidate levels (m_max={report.get('m_max', '?')}):")
        for row in report["levels"]:
            lines.append(
                f"  {row['level']:>4}  value={row['value']:>6}  kernel-excess={row['kernel_dim_excess']}"
            )

    if "spectrum" in report and isinstance(report["spectrum"], list):
        lines.append(f"spectrum at lambda={report['lambda']} (level {report['level']}):")
        for e in report["spectrum"]:
            origins = " ".join(f"{fam}@m={m}" for fam, m in e["origins"])
            lines.append(
                f"  eigenvalue={e['eigenvalue']:>8}  blocks={e['block_mult']} dim={e['total_dim']}  [{origins}]"
            )
    elif "spectrum" in report:
        lines.append("spectrum snapshots:")
        for label in sorted(report["spectrum"], key=_label_key):
            lines.append(f"  level {label}:")
            for e in report["spectrum"][label]:
                origins = " ".join(f"{fam}@m={m}" for fam, m in e["origins"])
                lines.append(
                    f"    eigenvalue={e['eigenvalue']:>8}  blocks={e['block_mult']} dim={e['total_dim']}  [{origins}]"
                )

    if "index" in report:
        idx = report["index"]
        lines.append(f"index at level {idx['level']}: {_render_element(idx['value'])}")
        lines.append(f"  route ring:    {_render_element(idx['routes']['ring'])}")
        lines.append(f"  route closed:  {_render_element(idx['routes']['closed'])}")
        for n in sorted(idx["routes"]["general"], key=int):
            lines.append(f"  route general(n={n}): {_render_element(idx['routes']['general'][n])}")

    if "indices" in report:
        lines.append("indices (all routes agree):")
        for idx in report["indices"]:
            lines.append(f"  {idx['level']:>4}  {_render_element(idx['value'])}")

    if "verdicts" in report:
        lines.append("verdicts:")
        for v in report["verdicts"]:
            extra = ""
            if "bounded_options" in v:
                extra = "  bounded-level-options=" + str([tuple(p) for p in v["bounded_options"]])
            lines.append(
                f"  {v['level']:>4}  {v['conclusion']}  [{', '.join(v['citations'])}]{extra}"
            )

    if "search" in report:
        s = report["search"]
        lines.append(
            f"bounded-pattern search (mu_max={s['mu_max']}, orbits={s['orbit_count']}):"
        )
        if s["patterns"]:
            for p in s["patterns"]:
                lines.append(f"  {_render_pattern(p)}")
        else:
            lines.append("  no closure patterns: every detected continuum is unbounded")

    if "sections" in report:
        lines.append(f"selftest grid: {report['grid']}")
        for name, count in sorted(report["sections"].items()):
            lines.append(f"  {name}: {count} checks ok")
        lines.append(f"status: {report['status']}")

    return "\n".join(lines) + "\n"
