#!/usr/bin/env python3
"""
Example usage of IntComplex.

This walks through the worked examples in data/:
1. Parse interactions and take their faces
2. Compute homology and layer homology
3. Multilayer homology of chosen loops
4. Persistence of a weighted complex
5. Audit a collapse
6. Run the digraph experiment

To run this example:
    python example_usage.py
"""

import logging
from pathlib import Path

from complexes import build_complex, free_pairs, read_complex_file, read_subset_file
from experiments import ExperimentRunner, render_report
from homology import HomologyEngine, boundary
from interactions import faces, parse_interaction, to_np
from persistence import PersistenceEngine, bottleneck, render_text
from settings import load_settings

DATA = Path(__file__).parent / "data"


def banner(title: str):
    print("\n" + "=" * 60)
    print(title)
    print("=" * 60)


def main():
    """Main example over the worked complexes"""

    settings = load_settings()
    logging.basicConfig(level=settings.log_level, format="%(levelname)s: %(message)s")

    print("=" * 60)
    print("IntComplex Example")
    print("=" * 60)

    # 1. Interactions
    banner("Interactions")
    sigma = parse_interaction("(((b,a),c),(c,(d,d)))")
    print(f"{sigma.text}: order {sigma.order}, pairs {to_np(sigma).pairs}")
    for j, face in enumerate(faces(sigma), 1):
        print(f"  F_{j} = {face.text}")
    print(f"  boundary: {boundary(parse_interaction('((1,2),3)'))}")

    # 2. Homology tables
    engine = HomologyEngine(settings.field)
    banner("Homology")
    for name in ("four_cycle", "cone", "layer_gap"):
        complex_ = read_complex_file(DATA / f"{name}.icx")
        signature = engine.signature(complex_)
        print(f"\n{name}: {len(complex_)} interactions")
        print(f"  betti: {signature.betti}")
        print(f"  layers: {signature.layer_betti}")

    cone = read_complex_file(DATA / "cone.icx")
    (cycle,) = engine.cycle_representatives(cone, 3)
    print(f"\ncone 3-cycle: {cycle}")

    # 3. Multilayer homology
    banner("Multilayer Homology")
    loops = read_complex_file(DATA / "two_loops.icx")
    print(f"whole complex: {engine.multilayer_betti(loops)}")
    for name in ("two_loops_first.txt", "two_loops_second.txt"):
        subset = read_subset_file(DATA / name)
        print(f"{name}: {engine.multilayer_betti(loops, subset)}")

    # 4. Persistence
    banner("Persistence")
    weighted = read_complex_file(DATA / "weighted_cone.icx")
    persistence = PersistenceEngine(settings.field)
    diagrams = persistence.weighted_diagrams(weighted)
    for diagram in diagrams:
        print(render_text(diagram, settings.barcode_width))
    print(f"\nbottleneck(H1, H1) = {bottleneck(diagrams[0], diagrams[0])}")

    # 5. Collapse audit
    banner("Collapse Audit")
    complex_ = build_complex(parse_interaction(t) for t in ("a", "b", "c", "(a,b)", "((a,b),c)"))
    for pair in free_pairs(complex_):
        audit = engine.audit_collapse(complex_, pair)
        print(
            f"{pair}: {audit.before} -> {audit.after}"
            f" elementary={audit.elementary} invariant={audit.invariant}"
        )

    # 6. Digraph experiment
    banner("Digraph Experiment")
    report = ExperimentRunner(settings.field).distinguishability_report()
    print(render_report(report), end="")

    print("\n" + "=" * 60)
    print("Example Complete!")
    print("=" * 60)


if __name__ == "__main__":
    main()
