"""Predefined-time controller synthesis and simulation.

Thin Python layer over the C++ core: build a time scale, pick an auxiliary
law, synthesize the bounded-gain controller, and simulate the perturbed
integrator chain.

    >>> import ptctl
    >>> ctrl = ptctl.synthesize(ptctl.linear_controller([1.0]), Tc=1.0,
    ...                         alpha=0.5, rho=0.0)
    >>> cfg = ptctl.SimConfig(); cfg.h = 1e-4; cfg.horizon = 1.0
    >>> traj = ptctl.simulate(ctrl, [5.0], ptctl.zero_disturbance(), cfg)
"""

from ._core import (  # noqa: F401
    AuxController,
    ConfigError,
    Disturbance,
    GainBasis,
    Method,
    NumericError,
    PeakRow,
    ScenarioResult,
    SimConfig,
    SweepResult,
    SweepRow,
    SynthesizedController,
    TerminalController,
    TimeScale,
    Trajectory,
    __version__,
    bounded_exp_controller,
    build_basis,
    constant_disturbance,
    controller_config_string,
    controller_from_config_string,
    csv_string,
    custom_terminal,
    detect_settling,
    energy_at,
    energy_sweep,
    export_svg,
    gamma_first_order,
    gamma_pair_second_order,
    gamma_positive,
    linear_controller,
    load_controller,
    make_pulse,
    make_timescale,
    poly_fixed_time,
    run_scenario,
    save_controller,
    scenario_names,
    second_order_sliding,
    sign_relay_terminal,
    simulate,
    simulate_law,
    sinusoid_disturbance,
    sliding_terminal,
    synthesize,
    uniform_stability_probe,
    user_disturbance,
    write_csv,
    x_from_z,
    z_from_x,
    zero_disturbance,
    zero_hold_terminal,
)
