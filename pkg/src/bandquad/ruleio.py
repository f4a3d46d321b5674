"""Rule file formats: JSON, CSV, and aligned text.

All formats store nodes and weights at full double precision (shortest
round-trip representation in JSON, 17 significant digits otherwise), so
a written rule reads back bit for bit.
"""

from __future__ import annotations

import io
import json

import numpy as np

from .rule import QuadratureRule

__all__ = ["write_rule_file", "read_rule_file", "format_rule", "parse_rule"]

FORMATS = ("json", "csv", "text")


def format_rule(rule: QuadratureRule, fmt: str = "json", config: dict | None = None) -> str:
    """Serialize a rule to one of the supported formats."""
    if fmt == "json":
        payload = {
            "c": rule.c,
            "n": rule.n,
            "chi": rule.chi,
            "lambda_abs": rule.lambda_abs,
            "below_transition": rule.below_transition,
            "version": rule.version,
            "config_digest": rule.config_digest,
            "nodes": rule.nodes.tolist(),
            "weights": rule.weights.tolist(),
        }
        if config is not None:
            payload["config"] = config
        return json.dumps(payload, indent=1) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        _write_header_comments(buf, rule)
        buf.write("node,weight\n")
        for x, w in zip(rule.nodes, rule.weights):
            buf.write(f"{x:.17g},{w:.17g}\n")
        return buf.getvalue()
    if fmt == "text":
        buf = io.StringIO()
        buf.write(f"bandlimited quadrature rule  (c={rule.c:.17g}, n={rule.n})\n")
        buf.write(f"chi        = {rule.chi:.17g}\n")
        buf.write(f"lambda_abs = {rule.lambda_abs:.17g}\n")
        if rule.below_transition:
            buf.write("warning    = n is below 2c/pi; accuracy not guaranteed\n")
        buf.write(f"{'node':>26s} {'weight':>26s}\n")
        for x, w in zip(rule.nodes, rule.weights):
            buf.write(f"{x:>26.17g} {w:>26.17g}\n")
        return buf.getvalue()
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def _write_header_comments(buf: io.StringIO, rule: QuadratureRule) -> None:
    buf.write(f"#c={rule.c:.17g}\n")
    buf.write(f"#n={rule.n}\n")
    buf.write(f"#chi={rule.chi:.17g}\n")
    buf.write(f"#lambda_abs={rule.lambda_abs:.17g}\n")
    buf.write(f"#below_transition={int(rule.below_transition)}\n")
    buf.write(f"#version={rule.version}\n")
    buf.write(f"#config_digest={rule.config_digest}\n")


def write_rule_file(rule: QuadratureRule, path: str, fmt: str = "json",
                    config: dict | None = None) -> None:
    """Write a rule to ``path`` in the given format."""
    with open(path, "w") as fh:
        fh.write(format_rule(rule, fmt, config))


def parse_rule(text: str) -> QuadratureRule:
    """Parse a rule from JSON or CSV text (auto-detected)."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        payload = json.loads(text)
        return QuadratureRule(
            c=float(payload["c"]),
            n=int(payload["n"]),
            nodes=np.asarray(payload["nodes"], dtype=np.float64),
            weights=np.asarray(payload["weights"], dtype=np.float64),
            chi=float(payload["chi"]),
            lambda_abs=float(payload["lambda_abs"]),
            below_transition=bool(payload.get("below_transition", False)),
            config_digest=str(payload.get("config_digest", "")),
            version=str(payload.get("version", "")),
        )
    header: dict[str, str] = {}
    nodes: list[float] = []
    weights: list[float] = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            key, _, value = line[1:].partition("=")
            header[key.strip()] = value.strip()
            continue
        if line.startswith("node"):
            continue
        x, _, w = line.partition(",")
        nodes.append(float(x))
        weights.append(float(w))
    if "c" not in header or "n" not in header:
        raise ValueError("rule file is missing its header")
    return QuadratureRule(
        c=float(header["c"]),
        n=int(header["n"]),
        nodes=np.asarray(nodes, dtype=np.float64),
        weights=np.asarray(weights, dtype=np.float64),
        chi=float(header.get("chi", "nan")),
        lambda_abs=float(header.get("lambda_abs", "nan")),
        below_transition=bool(int(header.get("below_transition", "0"))),
        config_digest=header.get("config_digest", ""),
        version=header.get("version", ""),
    )


def read_rule_file(path: str) -> QuadratureRule:
    """Read a rule previously written by :func:`write_rule_file`."""
    with open(path) as fh:
        return parse_rule(fh.read())
