"""Command-line surface: profile, recommend, compare, validate,
enumerate, session, prompt.

Exit codes: 0 success, 1 domain failure (invalid config, unknown
heuristic, model mismatch, invalid configuration), 2 I/O or syntax
failure (unreadable files, malformed CSV/JSON/TOML/model text).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from .catalog import ENSEMBLE_EXPANSIONS, CatalogError, normalize_name
from .feature_model.parser import parse_model
from .feature_model.semantics import (
    enumerate_configurations,
    feature_names,
    validate_configuration,
)
from .feature_model.types import Configuration, FeatureModelError, ParseError
from .heuristics import (
    HeuristicConfig,
    HeuristicsError,
    Requirements,
    explain,
    generate_prompt,
    recommend_cheatsheet,
    recommend_gpt,
    recommendation_from_dict,
    recommendation_to_dict,
    recommendation_to_json,
)
from .profiler import (
    ProblemType,
    TableFormatError,
    UnsupportedTargetError,
    classify_problem,
    load_table,
    profile_dataset,
    profile_from_dict,
    profile_to_json,
)
from .transition import (
    TransitionPolicy,
    decision_to_dict,
    init_session,
    metric_report_from_dict,
    observe,
    state_from_dict,
    state_to_dict,
    state_to_json,
)

__all__ = ["main"]

CONFIG_ENV_VAR = "MODELSEL_CONFIG"


class CliInputError(Exception):
    """An input artifact could not be read or parsed (exit code 2)."""


def _fail(message: object) -> None:
    print(f"error: {message}", file=sys.stderr)


def _emit(text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    sys.stdout.write(text)


def _read_text(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _load_feature_model(path: str):
    try:
        return parse_model(_read_text(path))
    except FeatureModelError as exc:
        raise CliInputError(f"{path}: {exc}") from exc


def _load_json(path: str):
    try:
        return json.loads(_read_text(path))
    except json.JSONDecodeError as exc:
        raise CliInputError(f"{path}: invalid JSON: {exc}") from exc


# ---------------------------------------------------------------------------
# config file plumbing
# ---------------------------------------------------------------------------

def _load_config_mapping(args) -> dict:
    path = getattr(args, "config", None) or os.environ.get(CONFIG_ENV_VAR)
    if not path:
        return {}
    if args.verbose:
        print(f"using config {path}", file=sys.stderr)
    text = _read_text(path)
    if path.endswith(".toml"):
        try:
            data = tomllib.loads(text)
        except tomllib.TOMLDecodeError as exc:
            raise CliInputError(f"{path}: invalid TOML: {exc}") from exc
    else:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise CliInputError(f"{path}: invalid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise CliInputError(f"{path}: config must be a mapping")
    unknown = sorted(set(data) - {"heuristics", "transition"})
    if unknown:
        raise HeuristicsError(
            f"unknown config sections: {', '.join(unknown)} "
            "(expected 'heuristics' and/or 'transition')")
    return data


def _heuristic_config(args) -> HeuristicConfig:
    return HeuristicConfig.from_dict(
        _load_config_mapping(args).get("heuristics", {}))


def _transition_policy(args) -> TransitionPolicy:
    return TransitionPolicy.from_dict(
        _load_config_mapping(args).get("transition", {}))


def _requirements(args) -> Requirements:
    return Requirements(
        nonlinear_suspected=args.nonlinear,
        limited_resources=args.limited_resources,
        interpretability_required=args.interpretability_required,
        multicollinearity_suspected=args.multicollinearity,
        few_important_features=args.few_important_features,
        ethical_flags=frozenset(args.ethical_flag or ()),
        objective=args.objective or "",
    )


def _problem_type(name):
    if name is None:
        return None
    try:
        return ProblemType(name)
    except ValueError:
        choices = ", ".join(pt.value for pt in ProblemType)
        raise HeuristicsError(
            f"unknown problem type {name!r} (choose one of: {choices})") \
            from None


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_profile(args) -> int:
    data = Path(args.csv).read_bytes()
    table = load_table(data, delimiter=args.delimiter,
                       header=not args.no_header)
    profile = profile_dataset(
        table, target=args.target,
        name=args.name or Path(args.csv).name)
    if args.format == "json":
        _emit(profile_to_json(profile))
    else:
        _emit(_render_profile(profile))
    return 0


def _render_profile(profile) -> str:
    lines = [f"dataset: {profile.name or '(unnamed)'}",
             f"rows: {profile.n_rows}",
             f"columns: {profile.n_columns}"]
    if profile.target is not None:
        lines.append(
            f"target: {profile.target} ({profile.target_type.value})")
    else:
        lines.append("target: (none)")
    try:
        lines.append(f"problem type: {classify_problem(profile).value}")
    except UnsupportedTargetError:
        lines.append("problem type: unsupported (Text target)")
    lines.append("column types:")
    for name, kind in profile.column_types.items():
        lines.append(f"  {name}: {kind.value}")
    quality = profile.quality
    lines.append("quality:")
    lines.append(
        "  missing data: "
        + (f"yes (worst column {quality.worst_fraction:.4f})"
           if quality.missing_data else "no"))
    lines.append(
        "  outliers: "
        + (f"yes ({', '.join(quality.affected_columns)})"
           if quality.outliers else "no"))
    lines.append(f"  noise: {'yes' if quality.noise else 'no'}")
    lines.append(
        "  unbalanced: "
        + (f"yes (minority {quality.minority_ratio:.4f})"
           if quality.unbalanced else "no"))
    return "\n".join(lines)


def cmd_recommend(args) -> int:
    profile = _profile_from_file(args.profile)
    reqs = _requirements(args)
    cfg = _heuristic_config(args)
    problem_type = _problem_type(args.problem_type)
    if args.heuristic == "gpt":
        rec = recommend_gpt(profile, reqs, cfg=cfg,
                            problem_type=problem_type)
    elif args.heuristic == "cheatsheet":
        rec = recommend_cheatsheet(profile, cfg=cfg, reqs=reqs,
                                   problem_type=problem_type)
    else:
        _fail(f"unknown heuristic {args.heuristic!r} "
              "(choose 'gpt' or 'cheatsheet')")
        return 1
    if args.format == "json":
        _emit(recommendation_to_json(rec))
    else:
        _emit(explain(rec))
    return 0


def _profile_from_file(path: str):
    return profile_from_dict(_load_json(path))


def _normalized(rec) -> set:
    return {normalize_name(name, rec.problem_type)
            for name in rec.ranked}


def _expanded(rec) -> set:
    expanded = set()
    for name in _normalized(rec):
        expanded.update(ENSEMBLE_EXPANSIONS.get(name, (name,)))
    return expanded


def cmd_compare(args) -> int:
    profile = _profile_from_file(args.profile)
    reqs = _requirements(args)
    cfg = _heuristic_config(args)
    gpt = recommend_gpt(profile, reqs, cfg=cfg)
    cheat = recommend_cheatsheet(profile, cfg=cfg, reqs=reqs)
    overlap = sorted(_normalized(gpt) & _normalized(cheat))
    expanded = sorted(_expanded(gpt) & _expanded(cheat))
    if args.format == "json":
        _emit(json.dumps({
            "gpt": recommendation_to_dict(gpt),
            "cheatsheet": recommendation_to_dict(cheat),
            "overlap": overlap,
            "expanded_overlap": expanded,
        }, indent=2))
    else:
        lines = ["gpt ranking:"]
        lines += [f"  {i}. {m}" for i, m in enumerate(gpt.ranked, 1)]
        lines.append("cheatsheet ranking:")
        lines += [f"  {i}. {m}" for i, m in enumerate(cheat.ranked, 1)]
        lines.append(f"overlap: {', '.join(overlap) or '(none)'}")
        lines.append("expanded overlap: "
                     + (", ".join(expanded) or "(none)"))
        _emit("\n".join(lines))
    return 0


def cmd_validate(args) -> int:
    fm = _load_feature_model(args.model)
    names = [part.strip() for part in (args.config or "").split(",")
             if part.strip()]
    report = validate_configuration(fm, Configuration(names))
    if args.format == "json":
        _emit(json.dumps({
            "valid": report.valid,
            "violations": [
                {"kind": v.kind.value, "subject": v.subject,
                 "detail": v.detail}
                for v in report.violations],
        }, indent=2))
    else:
        if report.valid:
            _emit("valid")
        else:
            _emit("\n".join(
                f"{v.kind.value}: {v.detail}" for v in report.violations))
    return 0 if report.valid else 1


def cmd_enumerate(args) -> int:
    fm = _load_feature_model(args.model)
    configs = enumerate_configurations(fm, limit=args.limit)
    order = feature_names(fm)
    listed = [[name for name in order if name in cfg] for cfg in configs]
    if args.format == "json":
        _emit(json.dumps(
            {"count": len(listed), "configurations": listed}, indent=2))
    else:
        _emit("\n".join(", ".join(cfg) for cfg in listed)
              if listed else "(no valid configurations)")
    return 0


def cmd_session_start(args) -> int:
    rec = recommendation_from_dict(_load_json(args.recommendation))
    state = init_session(rec, _transition_policy(args))
    if args.format == "json":
        _emit(state_to_json(state))
    else:
        _emit(f"session opened at {state.current_model} "
              f"(1 of {len(rec.ranked)})")
    return 0


def cmd_session_observe(args) -> int:
    data = _load_json(args.state)
    if isinstance(data, dict) and "state" in data \
            and "recommendation" not in data:
        data = data["state"]
    state = state_from_dict(data)
    report = metric_report_from_dict(_load_json(args.report))
    new_state, decision = observe(state, report)
    if args.format == "json":
        _emit(json.dumps({
            "state": state_to_dict(new_state),
            "decision": decision_to_dict(decision),
        }, indent=2))
    else:
        target = f" -> {decision.next_model}" if decision.next_model \
            else ""
        _emit(f"decision: {decision.kind.value}{target}\n"
              f"reason: {decision.reason.value}\n"
              f"note: {decision.note}")
    return 0


def cmd_prompt(args) -> int:
    profile = _profile_from_file(args.profile)
    _emit(generate_prompt(profile, args.objective or ""))
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"),
                        default="json", help="output format")
    common.add_argument("-v", "--verbose", action="store_true",
                        help="chatty notes on stderr")
    return common


def _add_requirement_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--nonlinear", action="store_true",
                        help="non-linear relationships are suspected")
    parser.add_argument("--limited-resources", action="store_true",
                        help="computational budget is tight")
    parser.add_argument("--interpretability-required",
                        action="store_true",
                        help="an interpretable model is required")
    parser.add_argument("--multicollinearity", action="store_true",
                        help="correlated predictors are suspected")
    parser.add_argument("--few-important-features", action="store_true",
                        help="only a few features should matter")
    parser.add_argument("--ethical-flag", action="append", metavar="FLAG",
                        help="ethical concern to record (repeatable)")
    parser.add_argument("--objective", default="",
                        help="modeling objective, free text")
    parser.add_argument("--problem-type", default=None, metavar="NAME",
                        help="override the inferred problem type")
    parser.add_argument("--config", default=None, metavar="FILE",
                        help="TOML or JSON config file "
                             f"(fallback: ${CONFIG_ENV_VAR})")


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="modelsel",
        description="Dataset profiling, rule-based model "
                    "recommendation, and selection sessions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("profile", parents=[common],
                       help="profile a CSV dataset")
    p.add_argument("csv", help="path to the CSV file")
    p.add_argument("--target", default=None, metavar="NAME",
                   help="target column name")
    p.add_argument("--name", default=None,
                   help="dataset display name (default: file name)")
    p.add_argument("--delimiter", default=",", help="field delimiter")
    p.add_argument("--no-header", action="store_true",
                   help="the file has no header row")
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("recommend", parents=[common],
                       help="rank candidate models for a profile")
    p.add_argument("--profile", required=True, metavar="FILE",
                   help="dataset profile JSON")
    p.add_argument("--heuristic", required=True, metavar="NAME",
                   help="'gpt' or 'cheatsheet'")
    _add_requirement_flags(p)
    p.set_defaults(func=cmd_recommend)

    p = sub.add_parser("compare", parents=[common],
                       help="run both heuristics side by side")
    p.add_argument("--profile", required=True, metavar="FILE",
                   help="dataset profile JSON")
    _add_requirement_flags(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("validate", parents=[common],
                       help="validate a configuration against a model")
    p.add_argument("--model", required=True, metavar="FML",
                   help="feature-model file")
    p.add_argument("--config", default="", metavar="NAMES",
                   help="comma-separated selected feature names")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("enumerate", parents=[common],
                       help="list all valid configurations")
    p.add_argument("--model", required=True, metavar="FML",
                   help="feature-model file")
    p.add_argument("--limit", type=int, default=None,
                   help="stop after this many configurations")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("session", help="iterative selection sessions")
    session_sub = p.add_subparsers(dest="session_command", required=True)
    s = session_sub.add_parser("start", parents=[common],
                               help="open a session on a recommendation")
    s.add_argument("--recommendation", required=True, metavar="FILE",
                   help="recommendation JSON")
    s.add_argument("--config", default=None, metavar="FILE",
                   help="TOML or JSON config file "
                        f"(fallback: ${CONFIG_ENV_VAR})")
    s.set_defaults(func=cmd_session_start)
    s = session_sub.add_parser("observe", parents=[common],
                               help="feed one metric report")
    s.add_argument("--state", required=True, metavar="FILE",
                   help="session state JSON (or prior observe output)")
    s.add_argument("--report", required=True, metavar="FILE",
                   help="metric report JSON")
    s.set_defaults(func=cmd_session_observe)

    p = sub.add_parser("prompt", parents=[common],
                       help="render the model-selection prompt")
    p.add_argument("--profile", required=True, metavar="FILE",
                   help="dataset profile JSON")
    p.add_argument("--objective", default="",
                   help="modeling objective, free text")
    p.set_defaults(func=cmd_prompt)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except CliInputError as exc:
        _fail(exc)
        return 2
    except (ParseError, TableFormatError) as exc:
        _fail(exc)
        return 2
    except json.JSONDecodeError as exc:
        _fail(f"invalid JSON: {exc}")
        return 2
    except UnicodeDecodeError as exc:
        _fail(f"undecodable input: {exc}")
        return 2
    except BrokenPipeError:
        # Downstream closed the pipe (e.g. | head); not our failure.
        # Point stdout at devnull so interpreter shutdown stays quiet.
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        return 0
    except OSError as exc:
        _fail(exc)
        return 2
    except CatalogError as exc:
        _fail(exc.args[0] if exc.args else exc)
        return 1
    except ValueError as exc:
        _fail(exc)
        return 1


if __name__ == "__main__":
    sys.exit(main())
