from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from gale_buddy import __version__, agent
from gale_buddy.checks import SUITES, suite_key
from gale_buddy.codec import (
    association_to_json,
    config_from_json,
    config_to_json,
    divisor_to_json,
    form_to_json,
    model_from_json,
    model_to_json,
    point_from_json,
    point_to_json,
    system_to_json,
    weyl_to_json,
)
from gale_buddy.cremona import CremonaWord, cr_apply, kernel_check
from gale_buddy.gale import associate, is_self_associated
from gale_buddy.generators import generate_config, lifted, pencil_base_points, plane_points, random_config, rng_for
from gale_buddy.linsys import (
    coble_sextic_witness,
    ninth_base_point,
    parse_conditions,
    quintic_witness,
    solve_system,
    weddle_membership,
)
from gale_buddy.projective import ProjectivePoint
from gale_buddy.quadrics import build_model, cover_image, in_open_locus, is_smooth_at, membership
from gale_buddy.report import format_diff, format_report
from gale_buddy.utils import (
    RunConfig,
    default_config_path,
    init_env,
    load_config,
    read_json,
    run_config_from,
    write_json,
)
from gale_buddy.weyl import (
    DivisorClass,
    anticanonical,
    apply,
    hyperplane_image,
    even_subsets,
    parse_word,
    w_element,
    word_element,
)

log = logging.getLogger("gale_buddy.cli")


def _read_input(path: str | None) -> dict:
    if not path:
        raise ValueError("input_missing")
    try:
        data = json.loads(Path(path).expanduser().read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as e:
        raise ValueError(f"input_invalid path={path} reason={e}") from None
    if isinstance(data, list):
        data = {"points": data}
    if not isinstance(data, dict):
        raise ValueError(f"input_invalid path={path}")
    return data


def _points(data: dict) -> list[ProjectivePoint]:
    raw = data.get("points")
    if not isinstance(raw, list):
        raise ValueError("input_invalid missing=points")
    return [point_from_json(p) for p in raw]


def _emit(payload: dict, output: str | None) -> None:
    if output:
        write_json(Path(output).expanduser(), payload)
        return
    print(json.dumps(payload, ensure_ascii=False, indent=2, sort_keys=True))


def _subset(text: str) -> list[int]:
    s = text.strip()
    if not s or s in {"-", "{}"}:
        return []
    return [int(p) for p in s.replace(";", ",").replace(" ", ",").split(",") if p]


def _run_config(args: argparse.Namespace) -> RunConfig:
    cfg_path = Path(args.config).expanduser()
    config: dict = {}
    if cfg_path.is_file():
        config = load_config(cfg_path)
        init_env(cfg_path)
    return run_config_from(
        config,
        command=args.command,
        seed=args.seed,
        bound=args.bound,
        trials=args.trials,
        n=getattr(args, "n", None),
        output=Path(args.output) if args.output else None,
    )


def _cmd_associate(args: argparse.Namespace, run: RunConfig) -> int:
    result = associate(config_from_json(_read_input(args.input)))
    _emit(association_to_json(result), args.output)
    return 0


def _cmd_self_assoc(args: argparse.Namespace, run: RunConfig) -> int:
    config = config_from_json(_read_input(args.input))
    _emit({"config": config_to_json(config), "self_associated": is_self_associated(config)}, args.output)
    return 0


def _cmd_linsys_dim(args: argparse.Namespace, run: RunConfig) -> int:
    data = _read_input(args.conditions)
    items = data.get("conditions", data.get("points"))
    if not isinstance(items, list):
        raise ValueError("input_invalid missing=conditions")
    items = [c if isinstance(c, dict) else {"point": c} for c in items]
    system = solve_system(args.n, args.d, parse_conditions(items, args.n))
    _emit(system_to_json(system), args.output)
    return 0


def _cmd_ninth_point(args: argparse.Namespace, run: RunConfig) -> int:
    if args.input:
        points = _points(_read_input(args.input))
    else:
        points = list(random_config(rng_for(run.seed), 2, 8, run.bound).points)
    q9 = ninth_base_point(points)
    _emit({"points": [point_to_json(p) for p in points], "ninth": point_to_json(q9)}, args.output)
    return 0


def _cmd_quintic(args: argparse.Namespace, run: RunConfig) -> int:
    if args.input:
        points = _points(_read_input(args.input))
    else:
        points = pencil_base_points(rng_for(run.seed), run.bound)
    system = quintic_witness(points)
    _emit({"points": [point_to_json(p) for p in points], "nullity": system.dimension, "system": system_to_json(system)}, args.output)
    return 0


def _cmd_coble_check(args: argparse.Namespace, run: RunConfig) -> int:
    if args.input:
        points = _points(_read_input(args.input))
    else:
        points = lifted(plane_points(rng_for(run.seed), 9, run.bound))
    cubic = coble_sextic_witness(points)
    _emit({"points": [point_to_json(p) for p in points], "cubic": form_to_json(cubic, 3)}, args.output)
    return 0


def _cmd_weddle_test(args: argparse.Namespace, run: RunConfig) -> int:
    points = _points(_read_input(args.input))
    if len(points) != 9:
        raise ValueError(f"wrong_point_count m={len(points)} need=9")
    member = weddle_membership(points[:8], points[8])
    _emit({"points": [point_to_json(p) for p in points], "member": member}, args.output)
    return 0


def _cmd_weyl(args: argparse.Namespace, run: RunConfig) -> int:
    m = args.m if args.m is not None else args.n + 3
    w = word_element(parse_word(args.word), args.n, m)
    minus_k = anticanonical(args.n, m)
    _emit(
        {
            "word": args.word,
            **weyl_to_json(w),
            "preserves_form": w.preserves_form(),
            "fixes_anticanonical": apply(w, minus_k) == minus_k,
        },
        args.output,
    )
    return 0


def _cmd_weyl_gn(args: argparse.Namespace, run: RunConfig) -> int:
    subset = _subset(args.J)
    w = w_element(subset, args.n)
    image = apply(w, DivisorClass.basis(0, args.n, args.n + 3))
    expected = hyperplane_image(subset, args.n)
    _emit(
        {
            "J": sorted(subset),
            **weyl_to_json(w),
            "image_e0": divisor_to_json(image),
            "hyperplane_image": divisor_to_json(expected),
            "hyperplane_match": image == expected,
        },
        args.output,
    )
    return 0 if image == expected else 1


def _cmd_cremona(args: argparse.Namespace, run: RunConfig) -> int:
    config = config_from_json(_read_input(args.input))
    word = CremonaWord.parse(args.word, config.n, config.m)
    result = cr_apply(word, config, normalization=args.normalization)
    _emit({"word": str(word), "input": config_to_json(config), "output": config_to_json(result)}, args.output)
    return 0


def _cmd_cremona_kernel(args: argparse.Namespace, run: RunConfig) -> int:
    if args.input:
        configs = [config_from_json(_read_input(args.input))]
    else:
        if args.n is None:
            raise ValueError("dimension_missing flag=--n")
        configs = [random_config(rng_for(run.seed, t), args.n, args.n + 3, run.bound) for t in range(run.trials_or(20))]
    n = configs[0].n
    subsets = [sorted(_subset(args.J))] if args.J is not None else [sorted(j) for j in even_subsets(n)]
    cases = [
        {"config": config_to_json(c), "J": j, "trivial": kernel_check(j, c)}
        for c in configs
        for j in subsets
    ]
    passed = sum(1 for c in cases if c["trivial"])
    _emit({"passed": passed, "total": len(cases), "cases": cases}, args.output)
    return 0 if passed == len(cases) else 1


def _cmd_quadrics(args: argparse.Namespace, run: RunConfig) -> int:
    model = build_model(_points(_read_input(args.input)))
    _emit(model_to_json(model), args.output)
    return 0


def _cmd_quadrics_check(args: argparse.Namespace, run: RunConfig) -> int:
    model = model_from_json(_read_input(args.model))
    data = _read_input(args.point)
    y = point_from_json(data.get("point", data.get("points")))
    member = membership(model, y)
    payload: dict = {"point": point_to_json(y), "member": member}
    if member:
        payload["smooth"] = is_smooth_at(model, y)
        payload["cover_image"] = point_to_json(cover_image(model, y))
        if model.points is not None:
            payload["open_locus"] = in_open_locus(model, y)
    _emit(payload, args.output)
    return 0


def _cmd_generate(args: argparse.Namespace, run: RunConfig) -> int:
    config = generate_config(args.n, args.m, run.seed, run.bound)
    _emit(config_to_json(config), args.output)
    return 0


def _cmd_suite(args: argparse.Namespace, run: RunConfig) -> int:
    names = [suite_key(n) for n in args.names] if args.names else list(SUITES)
    report = agent.collect_report(run, names)
    if args.output:
        write_json(Path(args.output).expanduser(), report)
    print(format_report(report))
    code = agent.exit_code(report)
    log.info("suite_done names=%s exit=%d", ",".join(names), code)
    return code


def _cmd_agent(args: argparse.Namespace, run: RunConfig) -> int:
    code = agent.run(args.config, args.names or None, seed=args.seed, bound=args.bound, trials=args.trials, n=args.n)
    state = agent.state_dir_for(load_config(Path(args.config).expanduser()), Path(args.config).expanduser())
    print(format_report(read_json(state / "reports" / "latest.json")))
    print(format_diff(read_json(state / "diffs" / "latest.json")))
    return code


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", default=str(default_config_path()))
    common.add_argument("--input", default=None)
    common.add_argument("--output", default=None)
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--bound", type=int, default=None)
    common.add_argument("--trials", type=int, default=None)
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="gale_buddy")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler, **kw) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], **kw)
        p.set_defaults(handler=handler)
        return p

    add("associate", _cmd_associate)
    add("self-assoc", _cmd_self_assoc)
    p = add("linsys-dim", _cmd_linsys_dim)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--conditions", required=True)
    add("ninth-point", _cmd_ninth_point)
    add("quintic", _cmd_quintic)
    add("coble-check", _cmd_coble_check)
    add("weddle-test", _cmd_weddle_test)
    p = add("weyl", _cmd_weyl)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--word", default="")
    p = add("weyl-gn", _cmd_weyl_gn)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--J", required=True)
    p = add("cremona", _cmd_cremona)
    p.add_argument("--word", required=True)
    p.add_argument("--normalization", choices=("frame", "coordinate"), default="frame")
    p = add("cremona-kernel", _cmd_cremona_kernel)
    p.add_argument("--J", default=None)
    p.add_argument("--n", type=int, default=None)
    p = add("quadrics", _cmd_quadrics)
    p.add_argument("--points", dest="input")
    p = add("quadrics-check", _cmd_quadrics_check)
    p.add_argument("--model", required=True)
    p.add_argument("--point", required=True)
    p = add("generate", _cmd_generate)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p = add("suite", _cmd_suite)
    p.add_argument("names", nargs="*")
    p.add_argument("--n", type=int, default=None)
    p = add("agent", _cmd_agent)
    p.add_argument("names", nargs="*")
    p.add_argument("--n", type=int, default=None)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not logging.getLogger().handlers:
        logging.basicConfig(
            level=logging.INFO if args.verbose else logging.WARNING,
            format="%(asctime)s %(levelname)s %(name)s %(message)s",
        )
    log.info("command_start name=%s", args.command)
    try:
        run = _run_config(args)
        return args.handler(args, run)
    except (ValueError, OSError) as e:
        log.error("command_failed name=%s error=%s", args.command, e)
        print(f"error: {e}", file=sys.stderr)
        return 2
