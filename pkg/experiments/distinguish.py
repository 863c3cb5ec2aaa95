"""
Distinguishability experiment: do homology signatures separate the fifteen
three-vertex digraphs, before and after adding the nine 3-interactions?
"""

import json
import logging

from algebra import Field
from homology import HomologyEngine
from models import ClaimVerdict, Digraph, DistinguishabilityReport, OutputFormat, Signature

from experiments.digraphs import catalog, digraph_complex

PLAIN_GROUPS = (("c", "d", "e"), ("f", "g", "h", "i"), ("j", "k", "l", "m"))
PLAIN_CLAIM = "unaugmented signatures agree within c,d,e; f,g,h,i; j,k,l,m"
AUGMENTED_CLAIM = "augmented signatures are pairwise distinct"
SIGNATURE_DEGREE = 3


def equivalence_classes(signatures: dict[str, Signature]) -> list[list[str]]:
    """Names grouped by equal signature, in catalog order"""
    groups: dict[str, list[str]] = {}
    for name in sorted(signatures):
        groups.setdefault(signatures[name].to_json(), []).append(name)
    return sorted(groups.values(), key=lambda names: names[0])


def _format_classes(classes: list[list[str]]) -> str:
    return " ".join("{" + ",".join(names) + "}" for names in classes)


def _format_signature(signature: Signature) -> str:
    betti = " ".join(str(b) for b in signature.betti)
    layers = " ".join(f"{p}:({a},{b})" for p, (a, b) in sorted(signature.layer_betti.items()))
    return f"betti {betti}  layer {layers}"


class ExperimentRunner:
    """Computes signatures of the digraph catalog and checks both claims"""

    def __init__(self, field: "str | Field | None" = None):
        self.engine = HomologyEngine(field)
        self.log(f"Experiment runner over {self.engine.field.name}")

    def log(self, message: str):
        """Log a message with runner context"""
        logging.info(f"[ExperimentRunner] {message}")

    def signatures(self, entries: tuple[Digraph, ...], augmented: bool) -> dict[str, Signature]:
        """Signature (betti 1..3, layer betti for layers 2 and 3) of every entry"""
        result = {}
        for entry in entries:
            complex_ = digraph_complex(entry, augmented)
            result[entry.name] = self.engine.signature(complex_, SIGNATURE_DEGREE)
        self.log(f"Computed {len(result)} signatures (augmented={augmented})")
        return result

    def distinguishability_report(
        self, entries: tuple[Digraph, ...] | None = None, augment: bool = True
    ) -> DistinguishabilityReport:
        """
        Signatures, equivalence classes and a verdict per claim.

        Args:
            entries: Digraphs to compare; the full catalog when omitted
            augment: Also compute augmented signatures and check that claim
        """
        entries = entries or catalog()
        plain = self.signatures(entries, augmented=False)
        plain_classes = equivalence_classes(plain)
        class_of = {name: i for i, names in enumerate(plain_classes) for name in names}
        grouped = all(
            len({class_of[name] for name in group if name in class_of}) <= 1 for group in PLAIN_GROUPS
        )
        verdicts = [ClaimVerdict(claim=PLAIN_CLAIM, holds=grouped, detail=_format_classes(plain_classes))]
        augmented = augmented_classes = None
        if augment:
            augmented = self.signatures(entries, augmented=True)
            augmented_classes = equivalence_classes(augmented)
            merged = [names for names in augmented_classes if len(names) > 1]
            detail = f"{len(augmented_classes)} classes"
            if merged:
                detail += ", merged " + _format_classes(merged)
            verdicts.append(ClaimVerdict(claim=AUGMENTED_CLAIM, holds=not merged, detail=detail))
        for verdict in verdicts:
            if not verdict.holds:
                logging.warning(f"[ExperimentRunner] claim fails: {verdict.claim} ({verdict.detail})")
        return DistinguishabilityReport(
            field=self.engine.field.name,
            plain=plain,
            plain_classes=plain_classes,
            augmented=augmented,
            augmented_classes=augmented_classes,
            verdicts=verdicts,
        )


def report_to_dict(report: DistinguishabilityReport, entries: tuple[Digraph, ...] | None = None) -> dict:
    arcs = {entry.name: [list(arc) for arc in entry.arcs] for entry in entries or catalog()}
    graphs = []
    for name in sorted(report.plain):
        row = {"name": name, "arcs": arcs.get(name, []), "plain": report.plain[name].as_dict()}
        if report.augmented is not None:
            row["augmented"] = report.augmented[name].as_dict()
        graphs.append(row)
    return {
        "field": report.field,
        "graphs": graphs,
        "plain_classes": report.plain_classes,
        "augmented_classes": report.augmented_classes,
        "verdicts": [verdict.model_dump() for verdict in report.verdicts],
        "passed": report.passed,
    }


def render_report(
    report: DistinguishabilityReport,
    fmt: "OutputFormat | str" = OutputFormat.TEXT,
    entries: tuple[Digraph, ...] | None = None,
) -> str:
    """Deterministic text table or JSON document"""
    fmt = OutputFormat(fmt)
    if fmt == OutputFormat.JSON:
        return json.dumps(report_to_dict(report, entries), indent=2)
    if fmt != OutputFormat.TEXT:
        raise ValueError(f"experiment reports have no {fmt.value} form")
    arcs = {entry.name: entry.arcs for entry in entries or catalog()}
    lines = [f"field: {report.field}", ""]
    for name in sorted(report.plain):
        arrows = " ".join(f"{u}>{v}" for u, v in arcs.get(name, ()))
        line = f"{name}  {arrows:<24}  plain: {_format_signature(report.plain[name])}"
        if report.augmented is not None:
            line += f"  |  augmented: {_format_signature(report.augmented[name])}"
        lines.append(line)
    lines.append("")
    lines.append(f"plain classes: {_format_classes(report.plain_classes)}")
    if report.augmented_classes is not None:
        lines.append(f"augmented classes: {_format_classes(report.augmented_classes)}")
    lines.append("")
    for verdict in report.verdicts:
        status = "PASS" if verdict.holds else "FAIL"
        lines.append(f"{status}  {verdict.claim}: {verdict.detail}")
    lines.append(f"verdict: {'PASS' if report.passed else 'FAIL'}")
    return "\n".join(lines) + "\n"
