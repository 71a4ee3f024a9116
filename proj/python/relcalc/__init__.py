"""Trust-relation calculus: relation scoring, Dempster-Shafer evidence,
subjective-logic opinions and Bayesian belief updates."""

from relcalc._core import (
    Assessment,
    Dossier,
    Error,
    Frame,
    MassFunction,
    MassVector,
    Opinion,
    PropertyCatalog,
    PropertyDef,
    Report,
    RunConfig,
    ScaleBounds,
    SeptupleConfig,
    SignConfig,
    TrustPerception,
    WeightConfig,
    __version__,
    aggregate_mass,
    assemble_masses,
    belief,
    build_report,
    classify,
    classify_opinion,
    combine_dempster,
    complement,
    default_base_rate,
    default_catalog,
    default_septuple,
    default_signs,
    ds_table,
    effective_value,
    evaluate_dossier,
    interpret,
    make_mass,
    make_opinion,
    mass_vector,
    opinion_from_mass,
    parse_catalog,
    parse_config,
    parse_dossier,
    parse_mass,
    plausibility,
    posterior,
    posterior_over_partition,
    projection,
    render_ds,
    render_mass,
    render_opinion,
    scale_bounds,
    septuple_label,
    sequential_update,
    trust_mass,
    trust_strength,
    vacuous_mass,
    validate_signs,
    validate_weights,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
