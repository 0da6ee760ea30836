import banet


BOTH_XOR = "n=2\n0: x0 ^ x1\n1: x0 ^ x1\n"


def test_parse_format_roundtrip():
    net = banet.parse_network(BOTH_XOR)
    assert banet.format_network(net) == BOTH_XOR
    assert banet.parse_network(banet.format_network(net)) == net
    assert banet.load_network("circulant n=2 coeffs=1,0") == net


def test_configuration_ops():
    x = banet.Configuration("1000")
    assert str(banet.rotate(x, 1)) == "0100"
    assert str(banet.flip(x, [1])) == "1100"
    assert str(banet.symmetric_conf(x, 1)) == "0010"
    d = banet.density(banet.Configuration("10000"))
    assert (d.num, d.den) == (1, 5)


def test_attractors_and_graphs():
    net = banet.parse_network(BOTH_XOR)
    async_graph = banet.build_graph(net, "asynchronous")
    attractors = banet.find_attractors(async_graph)
    assert [a.kind for a in attractors] == ["stable-configuration", "stable-oscillation"]
    assert banet.attractor_members(async_graph, attractors[1]) == ["10", "01", "11"]

    general = banet.find_attractors(banet.build_graph(net, "general"))
    assert len(general) == 1 and general[0].size == 1

    dot = banet.to_dot(async_graph)
    assert '"11" -> "01" [label="{0}"];' in dot


def test_orbit_and_profile():
    net = banet.load_network("circulant n=4 coeffs=3,0")
    schedule = banet.UpdateSchedule.parallel(4)
    run = banet.orbit(net, schedule, banet.Configuration("1000"))
    assert (run.transient, run.period, run.cycle) == (4, 1, ["0000"])

    profile = banet.convergence_profile(net, schedule)
    assert profile.t_star == 4
    assert profile.unit_attains_t_star
    assert profile.periods_divide_p_star


def test_circulant_toolbox():
    spec = banet.CirculantSpec.parse("circulant n=4 coeffs=3,0")
    assert banet.interaction_step(spec) == 0
    assert banet.symmetric_network(spec) == banet.CirculantSpec(4, [1, 0])
    assert str(banet.symmetric_network(spec)) == "circulant n=4 coeffs=0,1"
    assert len(banet.enumerate_circulants(5, 2)) == 4

    diagram = banet.space_time(spec, banet.Configuration("1000"), 4)
    assert diagram.to_text().splitlines() == ["#...", "##..", "#.#.", "####", "...."]

    assert banet.mask_table(spec, 0, 2) == [[0], [0, 3], [0, 2]]
    assert banet.eval_via_masks(spec, banet.Configuration("1100"), 0, 2) is True
    ok, violation = banet.check_symmetry(spec, 1, 16)
    assert ok and violation is None
    assert banet.repetition_degree(banet.Configuration("0101")) == 1


def test_schedules_and_updates():
    net = banet.load_network("circulant n=3 coeffs=2,0")
    u = banet.UpdateSchedule.parse("{0}{1,2}", 3)
    out = banet.apply_schedule(net, u, banet.Configuration("100"))
    assert str(out) == "110"
    seq_ok, path = banet.is_sequentialisable(
        banet.parse_network(BOTH_XOR), banet.Configuration("01"), [0, 1]
    )
    assert seq_ok and path == [(0, "11")]
    blocked, _ = banet.is_sequentialisable(
        banet.parse_network(BOTH_XOR), banet.Configuration("11"), [0, 1]
    )
    assert not blocked


def test_monotonicity_and_scan():
    report = banet.network_monotone(banet.parse_network(BOTH_XOR))
    assert not report.monotone
    assert report.at(0, 1) == "non-monotone"

    hits = banet.sensitivity_scan(2)
    assert len(hits) == 4
    for net, evidence in hits:
        assert not banet.network_monotone(net).monotone
        assert len(evidence["update"]) == 2


def test_power_two_suite():
    report = banet.verify_power_two_suite(3)
    assert report.n == 8
    assert report.all_passed()


def test_errors_surface_as_value_errors():
    import pytest

    with pytest.raises(ValueError):
        banet.parse_network("n=2\n0: x9\n1: x0\n")
    with pytest.raises(ValueError):
        banet.Configuration("10t1")
    with pytest.raises(ValueError):
        banet.enumerate_circulants(3, 1)
