"""File formats: polynomial input, trace records (JSONL) and run reports (JSON).

Input polynomials come either as JSON::

    {"coefficients": [[1, 0], [0, 0], [1, 0]]}

or as plain text, one coefficient per line, highest degree first::

    # x^2 - 1
    1
    0
    -1 0

A text line holds ``re im``, a bare ``re``, or a single ``a+bi`` token.
"""

from dataclasses import dataclass, field
import hashlib
import json

from .directed_line import DirectedLine, from_polar, parse_line
from .errors import EmptyPolynomialError, ParseError
from .polynomial import Polynomial, monic_normalize
from .solver import RootResult

__all__ = [
    "parse_polynomial_text",
    "parse_polynomial_file",
    "TraceRecord",
    "write_trace",
    "read_trace",
    "RunReport",
    "sort_result",
    "digest_bytes",
]


# -- polynomial input ---------------------------------------------------------

def _json_coefficient(item, index):
    if isinstance(item, bool):
        raise ParseError(f"coefficient {index} is a boolean", position=index)
    if isinstance(item, (int, float)):
        return DirectedLine(item, 0.0)
    if isinstance(item, list) and len(item) == 2 and all(
        isinstance(x, (int, float)) and not isinstance(x, bool) for x in item
    ):
        return DirectedLine(item[0], item[1])
    raise ParseError(f"coefficient {index} must be [re, im] or a number", position=index)


def _parse_json(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno, position=exc.colno) from None
    if not isinstance(doc, dict) or "coefficients" not in doc:
        raise ParseError('JSON input must be an object with a "coefficients" list')
    items = doc["coefficients"]
    if not isinstance(items, list):
        raise ParseError('"coefficients" must be a list')
    return [_json_coefficient(item, k + 1) for k, item in enumerate(items)]


def _parse_text(text):
    coeffs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        try:
            if len(fields) == 2:
                coeffs.append(DirectedLine(float(fields[0]), float(fields[1])))
            elif len(fields) == 1:
                coeffs.append(parse_line(fields[0]))
            else:
                raise ValueError("expected 're im' or 're'")
        except (ValueError, ArithmeticError) as exc:
            raise ParseError(f"bad coefficient {line!r}: {exc}", line=lineno) from None
    return coeffs


def parse_polynomial_text(text):
    """Parse JSON or line-oriented text into a monic :class:`Polynomial`."""
    stripped = text.lstrip()
    coeffs = _parse_json(text) if stripped.startswith("{") else _parse_text(text)
    if len(coeffs) < 2:
        raise EmptyPolynomialError(
            f"need at least 2 coefficients (degree >= 1), got {len(coeffs)}"
        )
    return monic_normalize(Polynomial(coeffs))


def parse_polynomial_file(path):
    with open(path, encoding="utf-8") as fh:
        return parse_polynomial_text(fh.read())


def digest_bytes(data):
    return "sha256:" + hashlib.sha256(data).hexdigest()


# -- traces -----------------------------------------------------------------

def _pair(v):
    return [v.re, v.im]


def _line(pair):
    return DirectedLine(pair[0], pair[1])


@dataclass(frozen=True)
class TraceRecord:
    """One accepted search step: everything needed to redraw its figure."""

    root_index: int
    iteration: int
    z: DirectedLine
    modulus: float
    branch: str
    used_exponent: int
    theta: float
    magnitude: float
    halvings: int
    vertices: tuple

    @classmethod
    def from_outcome(cls, root_index, iteration, z, outcome):
        return cls(
            root_index=root_index,
            iteration=iteration,
            z=z,
            modulus=outcome.old_modulus,
            branch=outcome.branch,
            used_exponent=outcome.used_exponent,
            theta=outcome.theta,
            magnitude=outcome.magnitude,
            halvings=outcome.halvings,
            vertices=tuple(outcome.vertices),
        )

    def to_dict(self):
        return {
            "root_index": self.root_index,
            "iteration": self.iteration,
            "z": _pair(self.z),
            "modulus": self.modulus,
            "branch": self.branch,
            "used_exponent": self.used_exponent,
            "theta": self.theta,
            "magnitude": self.magnitude,
            "halvings": self.halvings,
            "vertices": [_pair(v) for v in self.vertices],
        }

    @classmethod
    def from_dict(cls, d):
        return cls(
            root_index=d["root_index"],
            iteration=d["iteration"],
            z=_line(d["z"]),
            modulus=d["modulus"],
            branch=d["branch"],
            used_exponent=d["used_exponent"],
            theta=d["theta"],
            magnitude=d["magnitude"],
            halvings=d["halvings"],
            vertices=tuple(_line(v) for v in d["vertices"]),
        )

    @property
    def landing(self):
        """The point ``z + i`` this step moved to."""
        return self.z + from_polar(self.magnitude, self.theta)


def write_trace(records, path):
    with open(path, "w", encoding="utf-8") as fh:
        for rec in records:
            fh.write(json.dumps(rec.to_dict()) + "\n")


def read_trace(path):
    with open(path, encoding="utf-8") as fh:
        return [TraceRecord.from_dict(json.loads(line)) for line in fh if line.strip()]


# -- reports ------------------------------------------------------------------

def _result_to_dict(result):
    order = sorted(range(len(result.roots)), key=lambda k: (result.roots[k].re, result.roots[k].im))
    pick = lambda seq: [seq[k] for k in order] if seq else []
    return {
        "roots": [_pair(result.roots[k]) for k in order],
        "residuals": pick(result.residuals),
        "steps_per_root": pick(result.steps_per_root),
        "polish_steps": pick(result.polish_steps),
        "polished": pick(result.polished),
    }


def _result_from_dict(d):
    return RootResult(
        roots=tuple(_line(v) for v in d["roots"]),
        residuals=tuple(d["residuals"]),
        steps_per_root=tuple(d["steps_per_root"]),
        polished=tuple(d["polished"]),
        polish_steps=tuple(d.get("polish_steps", ())),
    )


def sort_result(result):
    """Reorder a :class:`RootResult` by ``(re, im)`` of the roots."""
    return _result_from_dict(_result_to_dict(result))


@dataclass
class RunReport:
    """What one CLI invocation produced.

    ``result`` is set for a single solve, ``sweep`` for ensemble mode.
    Roots are always kept sorted by ``(re, im)``.
    """

    input_digest: str
    config: dict
    result: RootResult = None
    wall_time: float = 0.0
    oracle_comparison: dict = None
    sweep: dict = None
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.result is not None:
            self.result = sort_result(self.result)

    def to_dict(self):
        out = {"input_digest": self.input_digest, "config": self.config}
        if self.result is not None:
            out["result"] = _result_to_dict(self.result)
        if self.sweep is not None:
            out["sweep"] = self.sweep
        if self.oracle_comparison is not None:
            out["oracle_comparison"] = self.oracle_comparison
        out.update(self.extra)
        out["wall_time"] = self.wall_time
        return out

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_dict(cls, d):
        known = {"input_digest", "config", "result", "sweep", "oracle_comparison", "wall_time"}
        return cls(
            input_digest=d["input_digest"],
            config=d["config"],
            result=_result_from_dict(d["result"]) if "result" in d else None,
            wall_time=d.get("wall_time", 0.0),
            oracle_comparison=d.get("oracle_comparison"),
            sweep=d.get("sweep"),
            extra={k: v for k, v in d.items() if k not in known},
        )

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))
