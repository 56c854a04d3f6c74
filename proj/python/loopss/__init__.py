"""Exact-arithmetic engine for the loop homology spectral sequence."""

from loopss._core import (
    AbelianGroup,
    ConsistencyError,
    Model,
    Page,
    ValidationError,
    assemble_total_degree,
    circle_piece,
    cpn_model,
    emit_json,
    extension_report,
    homology_of_pair,
    infinity_page,
    initial_page,
    kernel_basis,
    load_model,
    parse_model,
    render_chart,
    run_cli,
    snf,
    sphere_model,
    verify,
    ziller_reference,
)

__all__ = [
    "AbelianGroup",
    "ConsistencyError",
    "Model",
    "Page",
    "ValidationError",
    "assemble_total_degree",
    "circle_piece",
    "cpn_model",
    "emit_json",
    "extension_report",
    "homology_of_pair",
    "infinity_page",
    "initial_page",
    "kernel_basis",
    "load_model",
    "parse_model",
    "render_chart",
    "run_cli",
    "snf",
    "sphere_model",
    "verify",
    "ziller_reference",
]
