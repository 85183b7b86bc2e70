import io
import json
import logging
from dataclasses import dataclass, field as dc_field
from pathlib import Path
from typing import Any, Sequence

from django.conf import settings
from django.core.management import call_command
from django.core.management.base import CommandError
from django.db import models

from helpers import degrees
from helpers.errors import ParseError, UsageError
from helpers.linalg import FieldSpec, get_field
from ideals.models import MonomialIdeal
from ideals.utils import minimalize, require_t_determined

logger = logging.getLogger(__name__)


class Mode(models.TextChoices):
    FORMULA = "formula", "Closed formulas"
    ORACLE = "oracle", "Chain-complex oracle"
    BOTH = "both", "Formula and oracle, compared"


@dataclass
class JobSpec:
    ideal: MonomialIdeal
    t: degrees.Multidegree
    field: FieldSpec
    k: degrees.Multidegree | None = None
    mode: str = Mode.FORMULA
    options: dict[str, Any] = dc_field(default_factory=dict)

    @property
    def n(self) -> int:
        return self.ideal.n

    def as_json(self):
        payload = {
            "n": self.n,
            "t": list(self.t),
            "field": self.field.as_json(),
            "generators": self.ideal.as_json(),
        }
        if self.k is not None:
            payload["k"] = list(self.k)
        return payload


def _read(source) -> dict:
    try:
        if hasattr(source, "read"):
            data = json.load(source)
        else:
            with open(Path(source), encoding="utf-8") as handle:
                data = json.load(handle)
    except OSError as exc:
        raise ParseError(f"cannot open job file {source}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"job file is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ParseError("job file must hold a JSON object")
    return data


def parse_ideal(source, field=None) -> JobSpec:
    """
    Read {"n": …, "t": […], "field": {…}, "generators": [[…], …]} from a path or
    an open file. ``field`` overrides the file's field.
    """
    data = _read(source)
    try:
        n = int(data["n"])
        t = degrees.degree(data["t"])
        raw = [degrees.degree(g) for g in data.get("generators", [])]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"job file is missing or mangles a field: {exc}") from exc
    if len(t) != n:
        raise ParseError(f"t={t} does not have n={n} coordinates")
    chosen = field if field is not None else data.get("field", settings.NAK_DEFAULT_FIELD)
    ideal = minimalize(raw, n=n)
    if len(ideal.gens) != len(set(raw)):
        logger.warning("generators minimalized from %s to %s", [list(g) for g in raw], ideal.as_json())
    require_t_determined(ideal, t)
    return JobSpec(ideal=ideal, t=t, field=get_field(chosen))


def parse_k(text: str | None, n: int, default: Sequence[int] | None = None) -> degrees.Multidegree:
    if text is None:
        if default is None:
            raise UsageError("--k is required")
        return degrees.degree(default)
    k = degrees.parse_degree(text)
    if len(k) != n:
        raise UsageError(f"--k {text} does not have {n} coordinates")
    degrees.require_natural(k, name="k")
    return k


def render(payload) -> str:
    return json.dumps(payload, sort_keys=True)


def run_command(argv: Sequence[str]) -> tuple[int, str]:
    """Run one subcommand in process and return (exit code, stdout)."""
    if not argv:
        return 2, ""
    out = io.StringIO()
    err = io.StringIO()
    try:
        call_command(*argv, stdout=out, stderr=err)
    except CommandError as exc:
        return exc.returncode, out.getvalue()
    return 0, out.getvalue()
