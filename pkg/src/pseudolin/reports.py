"""Machine-readable run reports: JSON (schema-validated) and CSV.

Every CLI run produces a report with the command echo, instance
parameters, the output operator (when there is one), the degree-bound
comparison, the verification verdict and the wall time.  The JSON layout
is pinned by ``report_schema.json``, which ships with the package.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from pseudolin.ore import OrePoly
from pseudolin.relations import BoundReport

CSV_HEADER = "instance,params,i,observed,bound,slack,asserted"


def operator_payload(L: OrePoly | None):
    """{"order": r, "coeffs": [[c0, c1, ...], ...]} with integer entries."""
    if L is None:
        return None
    coeffs = []
    for c in L.coeffs:
        if not c.is_poly():
            raise ValueError("report operators must have polynomial "
                             "coefficients")
        row = []
        for f in c.num.coeffs:
            if f.denominator != 1:
                raise ValueError("report operators must be primitive")
            row.append(int(f))
        coeffs.append(row)
    return {"order": int(L.order), "coeffs": coeffs}


def bounds_payload(report: BoundReport | None):
    if report is None:
        return None
    return {
        "name": report.bound_name,
        "per_i": list(report.bounds),
        "observed": list(report.observed),
        "slack": list(report.slack),
        "asserted": report.asserted,
    }


@dataclass
class Report:
    command: str
    params: dict
    operator: OrePoly | None
    bounds: BoundReport | None
    verification_method: str
    verification_ok: bool
    seed: int | None
    wall_ms: float
    extra: dict | None = None

    def to_dict(self) -> dict:
        out = {
            "command": self.command,
            "params": self.params,
            "operator": operator_payload(self.operator),
            "bounds": bounds_payload(self.bounds),
            "verification": {
                "method": self.verification_method,
                "ok": self.verification_ok,
            },
            "seed": self.seed,
            "wall_ms": self.wall_ms,
        }
        if self.extra:
            out.update(self.extra)
        return out

    def write_json(self, path: str):
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(self.to_dict(), fh, indent=2, sort_keys=True)
            fh.write("\n")


def load_schema() -> dict:
    """The shipped JSON schema for reports."""
    text = resources.files("pseudolin").joinpath(
        "report_schema.json").read_text(encoding="utf-8")
    return json.loads(text)


def bound_rows(report: BoundReport, params: str):
    """CSV rows (instance,params,i,observed,bound,slack,asserted)."""
    rows = []
    for i in range(len(report.bounds)):
        obs = report.observed[i]
        slack = report.slack[i]
        rows.append(",".join([
            report.instance,
            params,
            str(i),
            "" if obs is None else str(obs),
            str(report.bounds[i]),
            "" if slack is None else str(slack),
            "true" if report.asserted else "false",
        ]))
    return rows


def write_csv(path: str, rows):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(CSV_HEADER + "\n")
        for row in rows:
            fh.write(row + "\n")
