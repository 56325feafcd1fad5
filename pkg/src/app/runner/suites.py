# Convfix Lab
# Suite case generation and per-case checks
# October 2026

import functools
import hashlib
import math
from dataclasses import asdict, dataclass

import numpy as np

from config.vars import ANGLE_TOL, MUKHERJEA_DECAY, SUITES, WINDOW
from src.app.scenario import Limits, ScenarioConfig, Tolerances
from src.app.runner.report import FAIL, PASS, UNDECIDED
from src.errors import PreconditionError, RepresentationError, UnknownCaseError
from src.groups.cayley import LatticeGroup, build_group
from src.groups.characters import characters_of
from src.groups.subgroups import all_subgroups, subgroup_closure, whole_group
from src.measures.cesaro import ConvergedTo, Undecided, cesaro_limit
from src.measures.idempotents import Greenleaf, NotGreenleafForm, classify_idempotent
from src.measures.measure import (
    absolute_value, absorb_identity_residual, adaptedness, character_twist, haar_on, is_state,
    measure_to_json, parse_measure_literal, sup_distance, tv_norm,
)
from src.measures.sampling import PROFILE_STYLES, Profile, random_contractive
from src.engine.ideals import ideal_I_omega
from src.engine.lattice import binomial_return, mukherjea_lattice
from src.engine.limits import cesaro_projection_check, more_equiv_suite
from src.engine.lp import lattice_lp_decay, lp_fixed_points
from src.engine.representations import regular_representation, representation_fixed_points, standard_irrep
from src.engine.structure import nondegenerate_corollary_check, theorem_61_verify
from src.dual.abelian import abelian_prop_check
from src.dual.fourier import dual_of, fourier_transform, inverse_fourier_transform, synthesize
from src.dual.functions import (
    AbelianTV, PositiveDefinite, cyclic_character, make_dual, multiplicative_domain_residual,
    pointwise_power, random_dual,
)
from src.dual.mukherjea import golden_angle, mukherjea_dual, rotation_dual
from src.dual.zsets import vn_fixed_space, z_set

DENSITIES = (0.25, 0.5, 0.75, 1.0)
LP_EXPONENTS = (1.0, 2.0, 3.0)
LATTICE_FIXTURES = {"walk": "-1:0.5, 1:0.5", "lazy": "-1:0.25, 0:0.5, 1:0.25", "point": "0:1"}
LATTICE_RANDOM_DRAWS = 4
LATTICE_N = 2048                 # the lattice suites read decay at n = 2048
ABELIAN_PROP_CYCLIC = 12         # abelian_prop always covers Z_1 .. Z_12
GREENLEAF_MAX_ORDER = 64
REGULAR_MAX_ORDER = 64          # the homomorphism check on lambda is quintic in |G|
ROTATION_PHASES = 7              # c = e^{2 pi i j / 7}, j = 0..6
ABSORB_TOL = 1e-10
HAAR_TOL = 1e-8
FOURIER_TOL = 1e-12
SHADOW_TOL = 1e-8
DUAL_SUITES = ("dual", "mukherjea_dual")


@dataclass(frozen=True)
class Case:
    suite: str
    case_id: str
    inputs: dict


@functools.lru_cache(maxsize=None)
def _finite_group(spec: str):
    return build_group(spec)


def carrier_for(spec: str, window: int = WINDOW):
    """One shared table per spec; tables are read-only so threads may share them."""
    if spec == "Z":
        return LatticeGroup(window)
    return _finite_group(spec)


@functools.lru_cache(maxsize=None)
def _regular(spec: str):
    return regular_representation(carrier_for(spec))


def derive_seed(base: int, *labels) -> int:
    """A stable 32-bit seed from the scenario seed and the case labels."""
    text = "/".join([str(base), *map(str, labels)])
    return int.from_bytes(hashlib.sha256(text.encode("utf-8")).digest()[:4], "big")


def plan_profile(group, seed: int, draw: int, style: str | None = None) -> dict:
    """Choose a sampling profile for one draw, reproducibly from its seed."""
    rng = np.random.default_rng([seed, 1])
    style = style or PROFILE_STYLES[draw % len(PROFILE_STYLES)]
    plan = {"style": style, "density": float(DENSITIES[int(rng.integers(len(DENSITIES)))])}
    if style == "character-twisted":
        generator = int(rng.integers(group.order))
        chars = characters_of(subgroup_closure(group, [generator]))
        plan["generators"] = [generator]
        plan["character"] = int(rng.integers(len(chars)))
    return plan


def profile_from_plan(group, plan: dict) -> Profile:
    if plan["style"] != "character-twisted":
        return Profile(plan["style"], plan["density"])
    subgroup = subgroup_closure(group, plan["generators"])
    return Profile(plan["style"], plan["density"], subgroup, characters_of(subgroup)[plan["character"]])


def measure_from_inputs(inputs: dict, window: int):
    """The measure a case runs on: an inline literal or a seeded draw."""
    carrier = carrier_for(inputs["group"], window)
    if "measure" in inputs:
        return parse_measure_literal(inputs["measure"], carrier)
    return random_contractive(carrier, inputs["seed"], profile_from_plan(carrier, inputs["profile"]))


# ---- case builders ----

def _common(config: ScenarioConfig) -> dict:
    # workers is a pool setting, not a case input
    limits = asdict(config.limits)
    limits.pop("workers")
    return {"tolerances": asdict(config.tolerances), "limits": limits}


def _draw_cases(config: ScenarioConfig, suite: str, specs) -> list[Case]:
    cases = []
    for spec in specs:
        group = carrier_for(spec)
        for draw in range(config.draws_per_group):
            seed = derive_seed(config.seed, suite, spec, draw)
            inputs = {"suite": suite, "group": spec, "draw": draw, "seed": seed,
                      "profile": plan_profile(group, seed, draw), **_common(config)}
            if suite == "lp":
                inputs["p"] = LP_EXPONENTS[draw % len(LP_EXPONENTS)]
            cases.append(Case(suite, f"{suite}/{spec}/{draw:04d}", inputs))
    return cases


def _fixture(config: ScenarioConfig, suite: str, spec: str, name: str, **fields) -> Case:
    inputs = {"suite": suite, "group": spec, "fixture": name, **fields, **_common(config)}
    return Case(suite, f"{suite}/{spec}/{name}", inputs)


def _measure_fixtures(config: ScenarioConfig, suite: str) -> list[Case]:
    cases = []
    for spec in config.groups:
        group = carrier_for(spec)
        cases.append(_fixture(config, suite, spec, "identity", measure=f"{group.identity}:1"))
        if spec == "cyclic:4":
            cases.append(_fixture(config, suite, spec, "shift", measure="1:1"))
            cases.append(_fixture(config, suite, spec, "half-difference", measure="1:0.5, 3:-0.5"))
    return cases


def _build_measure(config: ScenarioConfig) -> list[Case]:
    cases = _draw_cases(config, "measure", config.groups) + _measure_fixtures(config, "measure")
    cases += [_fixture(config, "measure", spec, "greenleaf") for spec in config.groups
              if carrier_for(spec).order <= GREENLEAF_MAX_ORDER]
    return cases


def _build_fixedpoint(config: ScenarioConfig) -> list[Case]:
    return _draw_cases(config, "fixedpoint", config.groups) + _measure_fixtures(config, "fixedpoint")


def _build_ideals(config: ScenarioConfig) -> list[Case]:
    cases = _draw_cases(config, "ideals", config.groups)
    for spec in config.groups:
        seed = derive_seed(config.seed, "ideals", spec, "maximal")
        cases.append(_fixture(config, "ideals", spec, "maximal", seed=seed,
                              profile={"style": "probability", "density": 1.0}))
    return cases


def _build_lp(config: ScenarioConfig) -> list[Case]:
    cases = _draw_cases(config, "lp", config.groups)
    cases.append(_fixture(config, "lp", "Z", "walk", measure=LATTICE_FIXTURES["walk"], p=2.0))
    return cases


def _build_lattice(config: ScenarioConfig) -> list[Case]:
    cases = [_fixture(config, "lattice", "Z", name, measure=text) for name, text in LATTICE_FIXTURES.items()]
    for draw in range(min(config.draws_per_group, LATTICE_RANDOM_DRAWS)):
        seed = derive_seed(config.seed, "lattice", "Z", draw)
        inputs = {"suite": "lattice", "group": "Z", "draw": draw, "seed": seed,
                  "profile": {"style": "probability", "density": 0.5}, **_common(config)}
        cases.append(Case("lattice", f"lattice/Z/{draw:04d}", inputs))
    return cases


def _build_dual(config: ScenarioConfig) -> list[Case]:
    cases = []
    for spec in config.groups:
        for draw in range(config.draws_per_group):
            seed = derive_seed(config.seed, "dual", spec, draw)
            inputs = {"suite": "dual", "group": spec, "draw": draw, "seed": seed, **_common(config)}
            cases.append(Case("dual", f"dual/{spec}/{draw:04d}", inputs))
        if spec.startswith("cyclic:"):
            for k in range(carrier_for(spec).order):
                cases.append(_fixture(config, "dual", spec, f"char{k}", character=k))
    return cases


def _abelian_prop_groups(config: ScenarioConfig) -> list[str]:
    specs = [spec for spec in config.groups if carrier_for(spec).abelian]
    specs += [f"cyclic:{n}" for n in range(1, ABELIAN_PROP_CYCLIC + 1)]
    return list(dict.fromkeys(specs))


def _build_abelian_prop(config: ScenarioConfig) -> list[Case]:
    return _draw_cases(config, "abelian_prop", _abelian_prop_groups(config))


def _build_mukherjea_dual(config: ScenarioConfig) -> list[Case]:
    cases = []
    for j in range(ROTATION_PHASES):
        cases.append(_fixture(config, "mukherjea_dual", "Z", f"golden-c{j}", theta=golden_angle(),
                              phase=j / ROTATION_PHASES))
    for spec in config.groups:
        group = carrier_for(spec)
        count = len(characters_of(whole_group(group)))
        for x in range(count):
            cases.append(_fixture(config, "mukherjea_dual", spec, f"char{x}", group_character=x))
    return cases


CASE_BUILDERS = {
    "measure": _build_measure,
    "fixedpoint": _build_fixedpoint,
    "ideals": _build_ideals,
    "lp": _build_lp,
    "lattice": _build_lattice,
    "dual": _build_dual,
    "abelian_prop": _build_abelian_prop,
    "mukherjea_dual": _build_mukherjea_dual,
}


def build_cases(config: ScenarioConfig) -> list[Case]:
    """Every case of every selected suite, in (suite, case_id) order."""
    cases = [case for suite in config.suites for case in CASE_BUILDERS[suite](config)]
    return sorted(cases, key=lambda c: (c.suite, c.case_id))


def find_case(config: ScenarioConfig, case_id: str) -> Case:
    suite = case_id.split("/", 1)[0]
    if suite not in SUITES:
        raise UnknownCaseError(f"unknown suite in case id {case_id!r}")
    for case in CASE_BUILDERS[suite](config):
        if case.case_id == case_id:
            return case
    raise UnknownCaseError(f"case {case_id!r} is not produced by this scenario")


def parse_dual_shorthand(text: str) -> dict:
    """`char:k` as case inputs {"character": k}."""
    head, sep, tail = text.strip().partition(":")
    if head != "char" or not sep:
        raise PreconditionError(f"dual {text!r} is not of the form char:k")
    try:
        return {"character": int(tail)}
    except ValueError as e:
        raise PreconditionError(f"dual {text!r}: {e}") from e


def inline_case(config: ScenarioConfig, suite: str, spec: str, measure: str | None = None,
                dual: str | None = None, p: float = 2.0) -> Case:
    """
    A one-off case from an inline measure literal or a `char:k` dual.

    Args:
        config (ScenarioConfig): supplies tolerances and limits.
        suite (str): suite to run the case through.
        spec (str): group spec, or Z for the lattice.
        measure (str): literal such as `1:0.5, 3:-0.5`, for the measure-side suites.
        dual (str): `char:k`, for the dual-side suites.
        p (float): exponent for the lp suite.
    Returns:
        Case: with case id `suite/spec/inline`.
    Raises:
        PreconditionError: if the suite is unknown or the wrong kind of input is given.
    """
    if suite not in CASE_RUNNERS:
        raise PreconditionError(f"unknown suite {suite!r}")
    inputs = {"suite": suite, "group": spec}
    if suite in DUAL_SUITES:
        if dual is None:
            raise PreconditionError(f"suite {suite} needs a dual such as char:1")
        inputs.update(parse_dual_shorthand(dual))
        cyclic_character(carrier_for(spec), inputs["character"])
    else:
        if measure is None:
            raise PreconditionError(f"suite {suite} needs a measure literal such as '0:0.5, 2:-0.5'")
        parse_measure_literal(measure, carrier_for(spec))
        inputs["measure"] = measure
    if suite == "lp":
        inputs["p"] = float(p)
    inputs.update(_common(config))
    return Case(suite, f"{suite}/{spec}/inline", inputs)


# ---- case runners ----

def _verdict(ok: bool, undecided: bool = False) -> str:
    if not ok:
        return FAIL
    return UNDECIDED if undecided else PASS


def _run_greenleaf(group, tol: Tolerances):
    pairs = 0
    failures = []
    worst = 0.0
    for subgroup in all_subgroups(group):
        for chi in characters_of(subgroup):
            pairs += 1
            found = classify_idempotent(character_twist(chi, subgroup), tol.idem_tol)
            if not isinstance(found, Greenleaf) or found.subgroup != subgroup:
                failures.append(list(subgroup.elements))
                continue
            worst = max(worst, max(abs(found.character(h) - chi(h)) for h in subgroup.elements))
    ok = not failures and worst <= tol.idem_tol
    return _verdict(ok), {"character_error": worst}, {"pairs": pairs, "failures": failures}


def _character_artifacts(group, report) -> dict:
    out = {"dim_fix": report.dim_fix, "has_char": report.character is not None, "dims": report.dims}
    if report.character is not None:
        out["character"] = report.character.to_json()
    if report.conflict is not None:
        out["conflict"] = report.conflict.to_json(group)
    return out


def run_measure(inputs: dict, tol: Tolerances, lim: Limits):
    """Cesaro limit, projection onto Fix L_omega, the equivalent conditions and idempotent classes."""
    if inputs.get("fixture") == "greenleaf":
        return _run_greenleaf(carrier_for(inputs["group"]), tol)
    omega = measure_from_inputs(inputs, lim.window)
    trace = cesaro_limit(omega, tol.cesaro_eps, lim.n_max)
    residuals = {"absorb_identity": absorb_identity_residual(omega, 8), "cesaro_last": trace.last_residual}
    artifacts = {"measure": measure_to_json(omega), "abs": measure_to_json(absolute_value(omega)),
                 "cesaro_verdict": trace.verdict.kind,
                 "cesaro_residuals": [[n, r] for n, r in trace.residuals]}
    classified = classify_idempotent(omega, tol.idem_tol)
    artifacts["idempotent_class"] = classified.kind
    ok = residuals["absorb_identity"] <= ABSORB_TOL and not isinstance(classified, NotGreenleafForm)
    if isinstance(trace.verdict, Undecided):
        return _verdict(ok, undecided=True), residuals, artifacts

    projection = cesaro_projection_check(omega, tol.rank_tol, trace, tol.cesaro_eps, lim.n_max)
    equivalence = more_equiv_suite(omega, tol.rank_tol, tol.cesaro_eps, lim.n_max, trace)
    residuals.update(projection.residuals)
    artifacts["dim_fix"] = projection.dims["fix"]
    artifacts["equivalent_conditions"] = equivalence.flags
    ok = ok and projection.ok and equivalence.consistent

    if isinstance(trace.verdict, ConvergedTo):
        limit = trace.verdict.limit
        artifacts["limit"] = measure_to_json(limit)
        limit_class = classify_idempotent(limit, 10 * tol.cesaro_eps)
        artifacts["limit_class"] = limit_class.kind
        ok = ok and isinstance(limit_class, Greenleaf)
        if is_state(omega):
            residuals["haar_fit"] = tv_norm(limit - haar_on(adaptedness(omega).s_group))
            ok = ok and residuals["haar_fit"] <= HAAR_TOL
    return _verdict(ok), residuals, artifacts


def run_fixedpoint(inputs: dict, tol: Tolerances, lim: Limits):
    """Character factorisation, fix transport, the adapted corollary and representation fixed vectors."""
    omega = measure_from_inputs(inputs, lim.window)
    group = omega.carrier
    report = theorem_61_verify(omega, tol.rank_tol, ANGLE_TOL)
    nondegenerate = nondegenerate_corollary_check(omega, tol.rank_tol, ANGLE_TOL)
    residuals = dict(report.residuals)
    artifacts = {"measure": measure_to_json(omega), "abs": measure_to_json(absolute_value(omega)),
                 **_character_artifacts(group, report), "adapted": nondegenerate.adapted}
    ok = report.ok and nondegenerate.ok
    if group.order <= REGULAR_MAX_ORDER:
        regular = representation_fixed_points(_regular(inputs["group"]), omega, tol.rank_tol, ANGLE_TOL)
        residuals["regular_angle"] = regular.angle
        artifacts["regular_fix_dim"] = regular.fixed.dim
        ok = ok and regular.matches
    try:
        irrep = representation_fixed_points(standard_irrep(group), omega, tol.rank_tol, ANGLE_TOL)
    except RepresentationError:
        irrep = None
    if irrep is not None:
        residuals["irrep_angle"] = irrep.angle
        artifacts["irrep_fix_dim"] = irrep.fixed.dim
        ok = ok and irrep.matches
    return _verdict(ok), residuals, artifacts


def run_ideals(inputs: dict, tol: Tolerances, lim: Limits):
    """I_omega against Fix L_omega; full-support states must give all of l^1_0."""
    omega = measure_from_inputs(inputs, lim.window)
    report = ideal_I_omega(omega, tol.rank_tol, ANGLE_TOL)
    residuals = {"annihilator_angle": report.angle, **report.residuals}
    if report.l10_residual is not None:
        residuals["l10"] = report.l10_residual
    artifacts = {"dim_ideal": report.ideal.dim, "dim_fix": report.dim_fix, "is_state": report.is_state,
                 "is_maximal": report.is_maximal}
    ok = report.ok
    if inputs.get("fixture") == "maximal":
        ok = ok and report.is_maximal
    return _verdict(ok), residuals, artifacts


def run_lp(inputs: dict, tol: Tolerances, lim: Limits):
    """Harmonic l_p vectors on finite groups; windowed decay on Z."""
    omega = measure_from_inputs(inputs, lim.window)
    p = float(inputs["p"])
    if omega.on_lattice:
        report = lattice_lp_decay(omega, p, lim.window, min(lim.n_max, LATTICE_N), tol.decay_tol, lim.support_cap)
        artifacts = {"lp_norms": report.lp_norms}
        return _verdict(report.decays and report.norms_decrease), {"max_pairing": report.max_pairing}, artifacts

    report = lp_fixed_points(omega, p, tol.rank_tol, ANGLE_TOL)
    info = adaptedness(omega)
    ok = report.matches
    if info.adapted and report.fixed.dim > 0:
        ok = ok and report.fixed.dim == 1
    artifacts = {"p": p, "dim_fix": report.fixed.dim, "adapted": info.adapted,
                 "has_char": report.predicted is not None}
    return _verdict(ok), {"angle": report.angle}, artifacts


def run_lattice(inputs: dict, tol: Tolerances, lim: Limits):
    """Non-compactness against windowed decay of Cesaro sums and powers on Z."""
    omega = measure_from_inputs(inputs, lim.window)
    report = mukherjea_lattice(omega, lim.window, min(lim.n_max, LATTICE_N), tol.decay_tol,
                               tol.cesaro_eps, lim.support_cap)
    residuals = {"cesaro_max": report.cesaro_max, "power_max": report.power_max, **report.samples}
    artifacts = {"compact": report.compact, "cesaro_decays": report.cesaro_decays,
                 "power_decays": report.power_decays}
    ok = report.consistent
    if inputs.get("fixture") == "walk":
        ok = ok and report.samples["power4_at_0"] == binomial_return(2) == 0.375
    return _verdict(ok), residuals, artifacts


def _dual_from_inputs(inputs: dict, lim: Limits):
    group = carrier_for(inputs["group"], lim.window)
    if "character" in inputs:
        return cyclic_character(group, inputs["character"])
    if "group_character" in inputs:
        chars = characters_of(whole_group(group))
        return make_dual(group, chars[inputs["group_character"]].as_array())
    if "theta" in inputs:
        return rotation_dual(inputs["theta"], np.exp(2j * math.pi * inputs["phase"]), lim.window)
    return random_dual(group, inputs["seed"])


def run_dual(inputs: dict, tol: Tolerances, lim: Limits):
    """Z_omega as a coset, Fix L_omega in VN(G), and the positive-definite shadows."""
    omega = _dual_from_inputs(inputs, lim)
    group = omega.carrier
    zr = z_set(omega, tol.z_tol)
    vn = vn_fixed_space(omega, tol.z_tol)
    squared = z_set(pointwise_power(omega, 2), tol.z_tol)
    residuals = {}
    artifacts = {"dual": omega.to_json(), "z_set": list(zr.z_set), "is_coset": zr.is_coset,
                 "rep": zr.rep, "flagged": zr.flagged, "vn_dim": vn.fixed.dim,
                 "near_misses": zr.near_misses}
    ok = (zr.ok and vn.matches and vn.ternary and vn.fixed.dim == len(zr.z_set)
          and set(zr.z_set) <= set(squared.z_set))

    if "character" in inputs:
        n, k = group.order, inputs["character"]
        kernel = tuple(m for m in range(n) if (k * m) % n == 0)
        ok = ok and zr.z_set == kernel and zr.rep == group.identity

    shadow = multiplicative_domain_residual(omega)
    if shadow is not None:
        residuals["multiplicative_domain"] = shadow
        ok = ok and shadow <= SHADOW_TOL
    if isinstance(omega.certificate, AbelianTV):
        residuals["synthesis"] = float(np.abs(synthesize(group, omega.spectrum) - omega.values).max())
        ok = ok and residuals["synthesis"] <= FOURIER_TOL
    if group.abelian and "seed" in inputs:
        mu = random_contractive(group, inputs["seed"])
        back = inverse_fourier_transform(group, fourier_transform(mu))
        residuals["fourier_round_trip"] = sup_distance(back, mu)
        ok = ok and residuals["fourier_round_trip"] <= FOURIER_TOL
    artifacts["certificate"] = omega.certificate.kind
    artifacts["positive_definite"] = isinstance(omega.certificate, PositiveDefinite)
    return _verdict(ok), residuals, artifacts


def run_abelian_prop(inputs: dict, tol: Tolerances, lim: Limits):
    """Z_{mu_hat} is nonempty exactly when d mu / d|mu| is a character."""
    mu = measure_from_inputs(inputs, lim.window)
    report = abelian_prop_check(mu, tol.z_tol)
    dual = dual_of(mu.carrier)
    artifacts = {"measure": measure_to_json(mu), "z_hat": [dual.table.label(x) for x in report.z_hat],
                 "matching": [dual.table.label(x) for x in report.matching],
                 "annihilator": [dual.table.label(x) for x in report.annihilator],
                 "phase_is_character": report.phase_is_character}
    return _verdict(report.ok), {}, artifacts


def run_mukherjea_dual(inputs: dict, tol: Tolerances, lim: Limits):
    """Cesaro pairings of norm-one dual functions against point masses."""
    omega = _dual_from_inputs(inputs, lim)
    report = mukherjea_dual(omega, n_max=lim.n_max, decay_tol=MUKHERJEA_DECAY, eps=tol.z_tol)
    residuals = {
        "max_cesaro": max(abs(p.cesaro) for p in report.pairings),
        "closed_form_error": max(p.closed_form_error for p in report.pairings),
    }
    artifacts = {"z_set": list(report.z_set), "all_vanish": report.all_vanish,
                 "pairings": {p.name: {"cesaro": p.cesaro, "power": p.power, "bound": p.bound}
                              for p in report.pairings}}
    ok = report.ok and report.all_vanish == (not report.z_nonempty)
    return _verdict(ok), residuals, artifacts


CASE_RUNNERS = {
    "measure": run_measure,
    "fixedpoint": run_fixedpoint,
    "ideals": run_ideals,
    "lp": run_lp,
    "lattice": run_lattice,
    "dual": run_dual,
    "abelian_prop": run_abelian_prop,
    "mukherjea_dual": run_mukherjea_dual,
}


def run_inputs(inputs: dict):
    """
    Run one case from its inputs alone.

    Returns:
        tuple[str, dict, dict]: verdict, residuals and artifacts.
    Raises:
        PreconditionError: if the inputs name no known suite.
    """
    suite = inputs.get("suite")
    if suite not in CASE_RUNNERS:
        raise PreconditionError(f"inputs name unknown suite {suite!r}")
    tol = Tolerances(**inputs["tolerances"])
    lim = Limits(**inputs["limits"])
    return CASE_RUNNERS[suite](inputs, tol, lim)
