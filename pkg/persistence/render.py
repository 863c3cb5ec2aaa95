"""
Barcode rendering (text, JSON, SVG) and the diagram JSON schema.

    {"dim": p, "bars": [{"birth": x, "death": y | null}, ...]}

Integral values are written as integers, other values as floats when the float
is exact and as "n/d" strings otherwise, so reading a diagram back is lossless.
"""

import io
import json
from fractions import Fraction
from typing import Any

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from errors import DiagramError
from models import OutputFormat, PersistenceDiagram, PersistencePoint, to_fraction


def json_number(value: Fraction) -> int | float | str:
    if value.denominator == 1:
        return value.numerator
    as_float = float(value)
    if Fraction(repr(as_float)) == value:
        return as_float
    return str(value)


def diagram_to_dict(diagram: PersistenceDiagram) -> dict[str, Any]:
    return {
        "dim": diagram.degree,
        "bars": [
            {
                "birth": json_number(point.birth),
                "death": None if point.death is None else json_number(point.death),
            }
            for point in diagram.points
        ],
    }


def _read_value(value: Any, where: str) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (int, float, str)):
        raise DiagramError(f"{where} must be a number")
    try:
        return to_fraction(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise DiagramError(f"{where}: {exc}") from exc


def diagram_from_dict(data: Any) -> PersistenceDiagram:
    """Validate and read one diagram in the JSON schema"""
    if not isinstance(data, dict) or set(data) != {"dim", "bars"}:
        raise DiagramError('a diagram is an object with exactly the keys "dim" and "bars"')
    degree = data["dim"]
    if isinstance(degree, bool) or not isinstance(degree, int) or degree < 1:
        raise DiagramError('"dim" must be a positive integer')
    if not isinstance(data["bars"], list):
        raise DiagramError('"bars" must be a list')
    points = []
    for k, bar in enumerate(data["bars"]):
        if not isinstance(bar, dict) or set(bar) != {"birth", "death"}:
            raise DiagramError(f'bar {k} must have exactly the keys "birth" and "death"')
        birth = _read_value(bar["birth"], f"bar {k} birth")
        death = None if bar["death"] is None else _read_value(bar["death"], f"bar {k} death")
        try:
            points.append(PersistencePoint(birth=birth, death=death))
        except ValueError as exc:
            raise DiagramError(f"bar {k}: birth must precede death") from exc
    return PersistenceDiagram(degree=degree, points=tuple(points))


def diagram_from_json(text: str) -> PersistenceDiagram:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DiagramError(f"invalid JSON: {exc}") from exc
    return diagram_from_dict(data)


def _label(point: PersistencePoint) -> str:
    death = "inf" if point.death is None else str(point.death)
    return f"[{point.birth},{death})"


def render_text(diagram: PersistenceDiagram, width: int = 40) -> str:
    """One line per bar: '-' runs scaled to the weight range, '>' for essential bars"""
    lines = [f"dim {diagram.degree}: {len(diagram)} bars"]
    if not diagram.points:
        return "\n".join(lines)
    values = [point.birth for point in diagram.points]
    values += [point.death for point in diagram.points if point.death is not None]
    low, high = min(values), max(values)
    span = (high - low) or Fraction(1)
    labels = [_label(point) for point in diagram.points]
    pad = max(len(label) for label in labels)
    for point, label in zip(diagram.points, labels):
        start = round((point.birth - low) / span * width)
        if point.death is None:
            bar = "-" * max(width - start, 1) + ">"
        else:
            bar = "-" * max(round((point.death - point.birth) / span * width), 1)
        lines.append(f"  {label.ljust(pad)}  {' ' * start}{bar}")
    return "\n".join(lines)


def render_svg(diagrams: list[PersistenceDiagram]) -> str:
    """Horizontal bars grouped by degree, x-axis in weight units"""
    points = [(d.degree, point) for d in diagrams for point in d.points]
    finite = [float(v) for _, point in points for v in (point.birth, point.death) if v is not None]
    low = min(finite, default=0.0)
    high = max(finite, default=1.0)
    ceiling = high + max((high - low) * 0.1, 0.5)
    with plt.rc_context({"svg.hashsalt": "intcomplex", "svg.fonttype": "none"}):
        fig, ax = plt.subplots(figsize=(6, 0.35 * max(len(points), 1) + 1.2))
        try:
            ticks, tick_labels = [], []
            for row, (degree, point) in enumerate(points):
                y = len(points) - row
                end = ceiling if point.death is None else float(point.death)
                ax.hlines(y, float(point.birth), end, colors=f"C{(degree - 1) % 10}", linewidth=3)
                if point.death is None:
                    ax.plot([end], [y], marker=">", color=f"C{(degree - 1) % 10}")
                ticks.append(y)
                tick_labels.append(f"H{degree}")
            ax.set_yticks(ticks)
            ax.set_yticklabels(tick_labels)
            ax.set_xlim(low - 0.5, ceiling + 0.5)
            ax.set_xlabel("weight")
            buffer = io.StringIO()
            fig.savefig(buffer, format="svg", metadata={"Date": None})
        finally:
            plt.close(fig)
    return buffer.getvalue()


def barcode_render(
    diagram: PersistenceDiagram, fmt: "OutputFormat | str" = OutputFormat.TEXT, width: int = 40
) -> str:
    return render_diagrams([diagram], fmt, width)


def render_diagrams(
    diagrams: list[PersistenceDiagram], fmt: "OutputFormat | str" = OutputFormat.TEXT, width: int = 40
) -> str:
    """Render several diagrams; JSON output is a single object for one diagram"""
    try:
        fmt = OutputFormat(fmt)
    except ValueError:
        raise ValueError(f"unknown format {fmt!r}") from None
    if fmt == OutputFormat.TEXT:
        return "\n".join(render_text(d, width) for d in diagrams)
    if fmt == OutputFormat.JSON:
        payload = [diagram_to_dict(d) for d in diagrams]
        return json.dumps(payload[0] if len(payload) == 1 else payload)
    return render_svg(diagrams)
