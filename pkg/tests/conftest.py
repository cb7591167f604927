"""Prints one PASS/FAIL line per acceptance criterion after the run."""

CRITERIA = {
    "test_criterion_1_triple_surface_bijection": 1,
    "test_criterion_2_euler_characteristic": 2,
    "test_criterion_3_pair_census": 3,
    "test_criterion_4_coset_product_coherence": 4,
    "test_criterion_5_concentration": 5,
    "test_criterion_6_spherical_function": 6,
    "test_criterion_7_projection_homomorphism": 7,
    "test_criterion_8_poisson_structure": 8,
}

LABELS = {
    1: "triple/surface bijection",
    2: "Euler characteristic",
    3: "pair census",
    4: "coset product coherence",
    5: "concentration",
    6: "spherical function",
    7: "projection homomorphism",
    8: "Poisson structure",
}

_results = {}


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    name = report.nodeid.rsplit("::", 1)[-1].split("[", 1)[0]
    number = CRITERIA.get(name)
    if number is not None:
        _results[number] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for number in sorted(_results):
        outcome = _results[number]
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(
            "criterion %d (%s): %s" % (number, LABELS[number], status)
        )
