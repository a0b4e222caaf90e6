"""
Down-Up Engine - Main Entry Point

Command-line surface over the kernel. Each subcommand:
1. Loads the algebra definition from config.yaml (or --config)
2. Runs one kernel operation on the configured L(phi, r, s, gamma)
3. Emits the result as text, or as a JSON envelope with --json

Exit codes: 0 success, 2 usage errors, 3 any other error.

Run: python -m downup_engine.main classify --json
"""

import argparse
import sys
from typing import Any

from downup_engine.algebra import PBWAlgebra, algebra_params_from_config, homogeneous_decomposition
from downup_engine.algebra.graded import to_graded_form
from downup_engine.classify import classify, compute_S
from downup_engine.conformal import (
    ConformalData,
    gamma_shift,
    nonconformal_split,
    solve_conformal,
    standard_form,
)
from downup_engine.conformal.relations import check_H_relations, known_central_elements
from downup_engine.expr import element_from_source, parse_scalar, tokenize
from downup_engine.modules import (
    Weight,
    annihilator_generators,
    build_Fc,
    build_Fc_bar,
    build_Fhw,
    exotic_module_conformal,
    exotic_module_r1,
    orbit,
    simplicity_certificate,
    verify_annihilates,
)
from downup_engine.modules.finite import FiniteModulePresentation, evaluate
from downup_engine.output.report_emitter import CommandResult, ReportEmitter
from downup_engine.poly import linalg
from downup_engine.utils.config_loader import get_nested, load_config
from downup_engine.utils.errors import DownUpError, InternalError, UsageError
from downup_engine.utils.logging_setup import get_logger, setup_logging

logger = get_logger("downup_engine.main")


def _element_result(source: str, x) -> dict[str, Any]:
    terms = [{"u": i, "h": j, "d": k, "coeff": str(c)} for (i, j, k), c in reversed(x.terms())]
    return {"input": source, "normal_form": str(x), "terms": terms}


def _matrix_text(name: str, rows: list[list[str]]) -> list[str]:
    width = max((len(x) for row in rows for x in row), default=1)
    lines = [f"{name} ="]
    lines += ["  [" + "  ".join(x.rjust(width) for x in row) + "]" for row in rows]
    return lines


def _key_values(result: dict[str, Any]) -> str:
    return "\n".join(f"{k}: {v}" for k, v in result.items())


class DownUpEngine:
    """
    Orchestrates the kernel for one configured algebra.

    Every public method returns a CommandResult; errors propagate as
    DownUpError and are turned into envelopes by ``main``.
    """

    def __init__(self, config_path: str | None = None, config: dict | None = None):
        self.config = config if config is not None else load_config(config_path)

        log_level = get_nested(self.config, "logging", "level", default="WARNING")
        self.logger = setup_logging(log_level)

        self.params = algebra_params_from_config(self.config)
        cache = get_nested(self.config, "cache", "enabled", default=True)
        self.algebra = PBWAlgebra(self.params, cache_enabled=bool(cache))

        self.rewrite_degree = get_nested(self.config, "bounds", "rewrite_degree", default=12)
        self.relation_bound = get_nested(self.config, "bounds", "relation_search", default=64)
        self.window = tuple(get_nested(self.config, "bounds", "window", default=[-20, 20]))
        self.period_search = get_nested(self.config, "bounds", "period_search", default=64)
        self.max_dim = get_nested(self.config, "bounds", "max_dim", default=64)

        self.logger.info(f"Engine configured for {self.params}")

    # ------------------------------------------------------------------
    # Elements
    # ------------------------------------------------------------------

    def _psi(self):
        """psi for H: the conformal psi, or psi0 of the split; None when gamma must be shifted first."""
        p = self.params
        if p.gamma and p.r != 1:
            return None
        data = solve_conformal(p, self.algebra)
        if isinstance(data, ConformalData):
            return data.psi
        return nonconformal_split(p).psi0

    def element(self, source: str):
        uses_H = any(t.type == "name" and t.value == "H" for t in tokenize(source))
        psi = self._psi() if uses_H else None
        return element_from_source(self.algebra, source, psi=psi)

    def normalize(self, source: str) -> CommandResult:
        x = self.element(source)
        return CommandResult("normalize", _element_result(source, x), str(x))

    def mul(self, left: str, right: str) -> CommandResult:
        x = self.element(left) * self.element(right)
        return CommandResult("mul", _element_result(f"({left})*({right})", x), str(x))

    def decompose(self, source: str) -> CommandResult:
        components, length = homogeneous_decomposition(self.element(source))
        result = {
            "input": source,
            "length": length,
            "components": {str(g): str(x) for g, x in components.items()},
            # (h, W) coordinates, W = ud
            "graded": {str(g): str(to_graded_form(x, self.rewrite_degree)) for g, x in components.items()},
        }
        lines = [f"degree {g}: {x}" for g, x in components.items()] + [f"length: {length}"]
        return CommandResult("decompose", result, "\n".join(lines))

    # ------------------------------------------------------------------
    # Structure
    # ------------------------------------------------------------------

    def _analysis_params(self):
        p = self.params
        if p.gamma and p.r != 1:
            shifted = gamma_shift(p)
            return shifted, [f"analysed after the isomorphism {p} -> {shifted}"]
        return p, []

    def conformal(self) -> CommandResult:
        params, notes = self._analysis_params()
        algebra = PBWAlgebra(params) if params is not self.params else self.algebra
        data = solve_conformal(params, algebra)
        if not isinstance(data, ConformalData):
            result = {"conformal": False, "reason": data.reason, "j": data.j, "notes": notes}
            return CommandResult("conformal", result, "\n".join([str(data)] + notes))
        residuals = check_H_relations(data, algebra)
        result = {
            "conformal": True,
            "psi": data.psi.format("h"),
            "H": str(data.H),
            "kernel_exponents": sorted(data.kernel_exponents),
            "relations": {name: x.is_zero() for name, x in residuals.items()},
            "notes": notes,
        }
        text = [f"psi = {result['psi']}", f"H = ud + psi(h) = {result['H']}"]
        text += [f"{name} relation holds: {ok}" for name, ok in result["relations"].items()]
        return CommandResult("conformal", result, "\n".join(text + notes))

    def split(self) -> CommandResult:
        params, notes = self._analysis_params()
        data = nonconformal_split(params)
        residuals = check_H_relations(data)
        result = {
            "j": data.j,
            "order_r": data.n,
            "phi0": data.phi0.format("h"),
            "phitilde": data.phi_tilde.format("h"),
            "psi0": data.psi0.format("h"),
            "C": str(data.C),
            "twist": data.twist().format("h"),
            "relations": {name: x.is_zero() for name, x in residuals.items()},
            "notes": notes,
        }
        return CommandResult("split", result, _key_values(result))

    def classify(self, bound: int | None = None) -> CommandResult:
        report = classify(self.params, bound=bound or self.relation_bound)
        return CommandResult("classify", report.to_dict(), report.to_text())

    def relgroup(self, bound: int | None = None) -> CommandResult:
        S = compute_S(self.params.r, self.params.s, bound=bound or self.relation_bound, declared=self.params.declared_relation)
        return CommandResult("relgroup", S.describe(), str(S))

    def iso(self) -> CommandResult:
        iso = standard_form(self.params)
        result = {"source": self.params.describe(), **iso.describe()}
        text = [f"{self.params} -> {iso.target}"]
        text += [f"  {g} -> {image}" for g, image in result["images"].items()]
        return CommandResult("iso", result, "\n".join(text))

    def central(self) -> CommandResult:
        found = known_central_elements(self.params, self.algebra)
        result = {"elements": [{"label": label, "element": str(x)} for label, x in found]}
        text = "\n".join(f"{label} = {x}" for label, x in found) or "no central elements from the orders of r and s"
        return CommandResult("central", result, text)

    # ------------------------------------------------------------------
    # Modules
    # ------------------------------------------------------------------

    def orbit(self, lam: str, beta: str, window: tuple[int, int] | None = None, bound: int | None = None) -> CommandResult:
        base = Weight(parse_scalar(lam), parse_scalar(beta))
        orb = orbit(self.params, base, window or self.window, self.period_search)
        cert = simplicity_certificate(orb, bound or self.relation_bound)
        result = {**orb.describe(), "simplicity": cert.describe()}
        lines = [f"{i}: lambda={w.lam}, beta={w.beta}" for i, w in orb.weights()]
        lines.append(f"period: {orb.period}")
        lines.append(f"simplicity: {cert.kind} ({cert.reason})")
        return CommandResult("orbit", result, "\n".join(lines))

    def build_module(self, kind: str, values: list[str]) -> FiniteModulePresentation:
        try:
            if kind == "fhw":
                lam, n = values
                return build_Fhw(self.params, parse_scalar(lam), int(n), self.max_dim)
            if kind in ("fc", "fcbar"):
                lam, beta, rho = values
                build = build_Fc if kind == "fc" else build_Fc_bar
                return build(self.params, Weight(parse_scalar(lam), parse_scalar(beta)), parse_scalar(rho), self.period_search)
        except ValueError as e:
            raise UsageError(f"bad arguments for {kind}: {e}") from e
        raise UsageError(f"unknown module kind {kind!r}; expected fhw, fc or fcbar")

    def _module_text(self, module: FiniteModulePresentation) -> list[str]:
        info = module.describe()
        lines = [f"{info['kind']} module, dim {info['dim']}"]
        for name in ("u", "d", "h"):
            lines += _matrix_text(name, info[name])
        lines += [f"{name}: {ok}" for name, ok in info["relations"].items()]
        return lines

    def module(self, kind: str, values: list[str]) -> CommandResult:
        module = self.build_module(kind, values)
        generators = annihilator_generators(module, self.algebra)
        result = {
            **module.describe(),
            "annihilators": [str(g) for g in generators],
            "annihilators_verified": all(verify_annihilates(module, g) for g in generators),
        }
        lines = self._module_text(module) + ["annihilator generators:"] + [f"  {g}" for g in generators]
        return CommandResult("module", result, "\n".join(lines))

    def annihilate(self, descriptor: str, source: str) -> CommandResult:
        kind, *values = descriptor.split(":")
        module = self.build_module(kind, values)
        x = self.element(source)
        matrix = evaluate(module, x)
        result = {
            "module": descriptor,
            "element": str(x),
            "annihilates": linalg.is_zero_matrix(matrix),
            "matrix": linalg.format_matrix(matrix),
        }
        lines = _matrix_text(f"action of {x}", result["matrix"]) + [f"annihilates: {result['annihilates']}"]
        return CommandResult("annihilate", result, "\n".join(lines))

    def exotic(self, kind: str, values: list[str], window: tuple[int, int] | None = None, mirror: bool = False) -> CommandResult:
        window = window or self.window
        try:
            if kind == "r1":
                s, gamma, C, n = values
                module = exotic_module_r1(parse_scalar(s), parse_scalar(gamma), parse_scalar(C), int(n), window, mirror)
            elif kind == "conf":
                r, s, C, j, m = values
                module = exotic_module_conformal(parse_scalar(r), parse_scalar(s), parse_scalar(C), int(j), int(m), window)
            else:
                raise UsageError(f"unknown exotic module {kind!r}; expected r1 or conf")
        except ValueError as e:
            raise UsageError(f"bad arguments for exotic {kind}: {e}") from e
        result = module.describe()
        lines = [f"{module.name} on window {list(module.window)}"]
        lines += [f"{name}: {ok}" for name, ok in result["relations"].items()]
        lines += [f"note: {n}" for n in result["notes"]]
        return CommandResult("exotic", result, "\n".join(lines))


# ----------------------------------------------------------------------
# Command line
# ----------------------------------------------------------------------


def parse_window(text: str) -> tuple[int, int]:
    try:
        a, b = (int(v) for v in text.split(".."))
    except ValueError:
        raise argparse.ArgumentTypeError(f"window must look like A..B, got {text!r}")
    if a > b:
        raise argparse.ArgumentTypeError(f"empty window {text!r}")
    return a, b


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="path to config.yaml")
    common.add_argument("--json", action="store_true", help="emit a JSON envelope")
    common.add_argument("--window", type=parse_window, help="index window A..B")
    common.add_argument("--bound", type=int, help="exponent bound for relation searches")

    parser = argparse.ArgumentParser(prog="downup", description="Exact computations in generalized down-up algebras")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        return sub.add_parser(name, parents=[common], help=help_text)

    add("normalize", "PBW normal form of an expression").add_argument("expr")
    p = add("mul", "product of two expressions")
    p.add_argument("left")
    p.add_argument("right")
    add("decompose", "homogeneous components and length").add_argument("expr")
    add("conformal", "solve for psi and H")
    add("split", "nonconformal split of phi")
    add("classify", "primitive ideals")
    p = add("orbit", "weight orbit and simplicity of W(lambda, beta)")
    p.add_argument("lam", metavar="LAMBDA")
    p.add_argument("beta", metavar="BETA")
    p = add("module", "finite-dimensional simple module")
    p.add_argument("kind", choices=["fhw", "fc", "fcbar"])
    p.add_argument("values", nargs="+")
    p = add("annihilate", "action of an element on a finite module")
    p.add_argument("descriptor", metavar="MODULE", help="fhw:LAMBDA:N, fc:LAMBDA:BETA:RHO or fcbar:LAMBDA:BETA:RHO")
    p.add_argument("expr")
    p = add("exotic", "non-weight modules on a window")
    p.add_argument("kind", choices=["r1", "conf"])
    p.add_argument("values", nargs="+", help="r1: S GAMMA C N; conf: R S C J M")
    p.add_argument("--mirror", action="store_true", help="exchange u and d (r1 only)")
    add("relgroup", "the relation group S(r, s)")
    add("iso", "standard form of the algebra")
    add("central", "central elements from the orders of r and s")
    return parser


def dispatch(engine: DownUpEngine, args: argparse.Namespace) -> CommandResult:
    command = args.command
    if command == "normalize":
        return engine.normalize(args.expr)
    if command == "mul":
        return engine.mul(args.left, args.right)
    if command == "decompose":
        return engine.decompose(args.expr)
    if command == "conformal":
        return engine.conformal()
    if command == "split":
        return engine.split()
    if command == "classify":
        return engine.classify(args.bound)
    if command == "orbit":
        return engine.orbit(args.lam, args.beta, args.window, args.bound)
    if command == "module":
        return engine.module(args.kind, args.values)
    if command == "annihilate":
        return engine.annihilate(args.descriptor, args.expr)
    if command == "exotic":
        return engine.exotic(args.kind, args.values, args.window, args.mirror)
    if command == "relgroup":
        return engine.relgroup(args.bound)
    if command == "iso":
        return engine.iso()
    return engine.central()


def main(argv: list[str] | None = None, config: dict | None = None) -> int:
    """Main entry point; returns the exit code."""
    args = build_parser().parse_args(argv)
    mode = "json" if args.json else "text"
    try:
        engine = DownUpEngine(args.config, config)
        if not args.json:
            mode = get_nested(engine.config, "output", "mode", default="text")
        outcome = dispatch(engine, args)
    except DownUpError as e:
        logger.error(f"{args.command} failed: {e.name}: {e.message}")
        ReportEmitter(mode).emit(CommandResult.failure(args.command, e))
        return 2 if e.usage else 3
    except Exception as e:
        logger.error(f"{args.command} failed unexpectedly: {e}", exc_info=True)
        ReportEmitter(mode).emit(CommandResult.failure(args.command, InternalError(e)))
        return 3
    ReportEmitter(mode).emit(outcome)
    return 0


if __name__ == "__main__":
    sys.exit(main())
