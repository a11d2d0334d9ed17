"""Risk-aware escape route planning on directed networks.

The heavy lifting lives in the compiled extension; this package re-exports
its public surface.
"""

from dpero._core import (
    ComparisonRecord,
    ConfigError,
    DomainError,
    EscapePath,
    GenParams,
    InvalidPathError,
    NoEscapeRouteError,
    RiskNetwork,
    Scenario,
    ScenarioSpec,
    ValueTable,
    build_network,
    dijkstra_risk_oracle,
    emit_report,
    enumerate_best_path,
    extract_path,
    generate_gre,
    grid_exits,
    load_scenario,
    make_scenario,
    monte_carlo_survival,
    place_defenders,
    risk_cost,
    run_comparison,
    save_scenario,
    score_path,
    shortest_time_path,
    sweep,
    sweep_instance_seed,
    value_iteration,
)

__all__ = [
    "ComparisonRecord",
    "ConfigError",
    "DomainError",
    "EscapePath",
    "GenParams",
    "InvalidPathError",
    "NoEscapeRouteError",
    "RiskNetwork",
    "Scenario",
    "ScenarioSpec",
    "ValueTable",
    "build_network",
    "dijkstra_risk_oracle",
    "emit_report",
    "enumerate_best_path",
    "extract_path",
    "generate_gre",
    "grid_exits",
    "load_scenario",
    "make_scenario",
    "monte_carlo_survival",
    "place_defenders",
    "risk_cost",
    "run_comparison",
    "save_scenario",
    "score_path",
    "shortest_time_path",
    "sweep",
    "sweep_instance_seed",
    "value_iteration",
]
