"""Command-line interface.

Subcommands:

  enumerate  stream every weight-w operator for one n (optionally one class)
  oracle     independent identity scan over the full candidate space, diffed
             against the tree-side enumeration
  count      labeled or unlabeled count tables per class, cross-checked
             against closed forms and the embedded reference tables
  conjecture evidence runs for the two conjectured splitting counts
  verify     check one operator file against the identity and the entrywise
             structure conditions
  classify   full classification of one operator file
  tree       operator file -> colored rooted tree file
  matrix     colored rooted tree file -> operator file
  theorem3   certify the constructive idempotent basis over all (or sampled)
             operators for one n

Exit codes: 0 success; 2 validation failure (bad flag values, out-of-range
n, semantically invalid inputs, non-RB input where one is required);
3 cross-check or reference-table mismatch; 4 conjecture divergence;
5 unparseable input file.  Reports go to stdout (or --out) and are
byte-identical across runs with the same flags, including under --jobs > 1;
wall-clock timing is printed to stderr only.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time
from fractions import Fraction
from itertools import product
from multiprocessing import Pool

from . import tables
from .bijection import RBTreeForm, matrix_to_tree, tree_to_matrix
from .exactlin import rat
from .rbcore import (classify, normalize_weight, operator_from_dict,
                     operator_to_dict, verify_rb_identity,
                     verify_structure_conditions)
from .induced import certify
from .trees import (BLACK, WHITE, ColoredRootedTree, TreeStructureError,
                    alternating_check, canonical_code, colored_tree_from_dict,
                    colored_tree_to_dict, count_splitting_labeled_fast,
                    count_unlabeled_all,
                    enumerate_labeled_rooted_trees, enumerate_proper_colorings,
                    levels, proper_check, prufer_to_parent)

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_MISMATCH = 3
EXIT_DIVERGENCE = 4
EXIT_PARSE = 5

DEFAULT_MAX_N = 7
ORACLE_MAX_N = 4
THEOREM3_EXHAUSTIVE_MAX_N = 4
THEOREM3_SAMPLED_MAX_N = 6
UNLABELED_ENUM_MAX_N = 6

CLASS_CHOICES = ("all", "splitting", "inner-splitting", "non-splitting")


class CliError(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code
        self.message = message


def _env_max_n():
    raw = os.environ.get("RBLAB_MAX_N")
    if raw is None:
        return DEFAULT_MAX_N
    try:
        value = int(raw)
    except ValueError:
        raise CliError(EXIT_VALIDATION,
                       f"RBLAB_MAX_N must be an integer, got {raw!r}") from None
    if value < 1:
        raise CliError(EXIT_VALIDATION, "RBLAB_MAX_N must be at least 1")
    return value


def _check_n(n, cap, what="--n", force=False):
    if n < 1:
        raise CliError(EXIT_VALIDATION, f"{what} must be at least 1")
    if n > cap and not force:
        raise CliError(EXIT_VALIDATION,
                       f"{what}={n} exceeds the allowed maximum {cap} "
                       "(pass --force to override)")
    return n


def _parse_weight(text):
    try:
        w = rat(text)
    except (ValueError, TypeError, ZeroDivisionError):
        raise CliError(EXIT_VALIDATION,
                       f"--weight must be a rational p/q, got {text!r}") from None
    if w == 0:
        raise CliError(EXIT_VALIDATION, "--weight must be nonzero")
    return w


def _emit(text, out):
    if out:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_report(report, out):
    _emit(json.dumps(report, indent=2) + "\n", out)


def _pool_map(fn, task_list, jobs):
    if jobs <= 1 or len(task_list) <= 1:
        return [fn(t) for t in task_list]
    with Pool(min(jobs, len(task_list))) as pool:
        return pool.map(fn, task_list)


def _tree_slices(n, jobs):
    """Work partitions keyed by the first Prufer symbol; slices in order
    concatenate to the sequential enumeration, keeping output stable."""
    if jobs <= 1 or n < 2:
        return [None]
    return list(range(n + 1))


def _class_label(parent, lv, color):
    if proper_check(parent, color):
        return "inner-splitting" if alternating_check(lv, color) else "splitting"
    return "non-splitting"


def _class_matches(label, class_filter):
    if class_filter == "all":
        return True
    if class_filter == "splitting":
        return label in ("splitting", "inner-splitting")
    return label == class_filter


# ---------------------------------------------------------------- enumerate

def _enumerate_worker(task):
    n, first, weight_str, class_filter, fmt = task
    w = Fraction(weight_str)
    pieces = []
    for parent in enumerate_labeled_rooted_trees(n, first):
        lv = levels(parent)
        for color in product((WHITE, BLACK), repeat=n):
            label = _class_label(parent, lv, color)
            if not _class_matches(label, class_filter):
                continue
            op = tree_to_matrix(RBTreeForm(ColoredRootedTree(n, parent, color), w))
            if fmt == "json":
                pieces.append(json.dumps(operator_to_dict(op),
                                         separators=(",", ":")) + "\n")
            else:
                flat = ";".join(str(x) for x in op.matrix.entries)
                pieces.append(f"{n},{w},{label},{flat}\n")
    return "".join(pieces)


def cmd_enumerate(args):
    cap = _env_max_n()
    n = _check_n(args.n, cap, force=args.force)
    w = _parse_weight(args.weight)
    tasks = [(n, first, str(w), args.class_filter, args.format)
             for first in _tree_slices(n, args.jobs)]
    chunks = _pool_map(_enumerate_worker, tasks, args.jobs)
    header = "" if args.format == "json" else "n,weight,class,matrix\n"
    _emit(header + "".join(chunks), args.out)
    return EXIT_OK


# ------------------------------------------------------------------- oracle

def _oracle_rows(n, i):
    """All row candidates for index i: diagonal slot in {0,-1}, the rest
    in {0,1,-1}; the product order fixes the scan order."""
    domains = [(0, -1) if k == i else (0, 1, -1) for k in range(n)]
    return list(product(*domains))

def _row_self_ok(row, i):
    d2 = 2 * row[i] + 1
    return all(x * x == d2 * x for x in row)

def _row_pair_ok(ra, rb, i, j):
    # identity on the basis pair (e_i, e_j), i != j; symmetric in (i, j)
    a, b = ra[j], rb[i]
    return all(x * y == a * y + b * x for x, y in zip(ra, rb))

def _oracle_scan_slice(task):
    n, first_idx = task
    rows = [_oracle_rows(n, i) for i in range(n)]
    selfok = [[_row_self_ok(r, i) for r in rows[i]] for i in range(n)]
    pair = {}
    for i in range(n):
        for j in range(i + 1, n):
            pair[(i, j)] = [[_row_pair_ok(ra, rb, i, j) for rb in rows[j]]
                            for ra in rows[i]]
    found = []
    chosen = [0] * n

    def rec(i):
        rng = range(len(rows[i])) if (i or first_idx is None) else (first_idx,)
        for a in rng:
            if not selfok[i][a]:
                continue
            if any(not pair[(j, i)][chosen[j]][a] for j in range(i)):
                continue
            chosen[i] = a
            if i + 1 == n:
                found.append(tuple(x for k in range(n) for x in rows[k][chosen[k]]))
            else:
                rec(i + 1)

    rec(0)
    return found


def _enumerate_flat_weight1(n):
    out = set()
    for parent in enumerate_labeled_rooted_trees(n):
        for color in product((WHITE, BLACK), repeat=n):
            op = tree_to_matrix(
                RBTreeForm(ColoredRootedTree(n, parent, color), Fraction(1)))
            out.add(tuple(int(x) for x in op.matrix.entries))
    return out


def cmd_oracle(args):
    n = _check_n(args.n, ORACLE_MAX_N, force=args.force)
    rows_per_index = 2 * 3 ** (n - 1)
    if args.jobs > 1 and n >= 2:
        slices = [(n, a) for a in range(rows_per_index)]
    else:
        slices = [(n, None)]
    scanned = []
    for part in _pool_map(_oracle_scan_slice, slices, args.jobs):
        scanned.extend(part)
    scan_set = set(scanned)
    enum_set = _enumerate_flat_weight1(n)
    missing = sorted(enum_set - scan_set)
    extra = sorted(scan_set - enum_set)
    mismatches = []
    if missing:
        mismatches.append({"kind": "missing-from-scan", "count": len(missing),
                           "examples": [list(m) for m in missing[:5]]})
    if extra:
        mismatches.append({"kind": "extra-in-scan", "count": len(extra),
                           "examples": [list(m) for m in extra[:5]]})
    report = {
        "command": "oracle",
        "parameters": {"n": n},
        "candidates": rows_per_index ** n,
        "identity_solutions": len(scan_set),
        "enumerated": len(enum_set),
        "match": not mismatches,
        "mismatches": mismatches,
    }
    _emit_report(report, args.out)
    return EXIT_OK if not mismatches else EXIT_MISMATCH


# -------------------------------------------------------------------- count

def _count_labeled_worker(task):
    n, first = task
    c_all = c_split = c_inner = 0
    for parent in enumerate_labeled_rooted_trees(n, first):
        lv = levels(parent)
        for color in product((WHITE, BLACK), repeat=n):
            c_all += 1
            if proper_check(parent, color):
                c_split += 1
                if alternating_check(lv, color):
                    c_inner += 1
    return c_all, c_split, c_inner


def _count_unlabeled_worker(task):
    n, first = task
    codes_all, codes_split, codes_inner = set(), set(), set()
    for parent in enumerate_labeled_rooted_trees(n, first):
        lv = levels(parent)
        for color in product((WHITE, BLACK), repeat=n):
            code = canonical_code(ColoredRootedTree(n, parent, color))
            codes_all.add(code)
            if proper_check(parent, color):
                codes_split.add(code)
                if alternating_check(lv, color):
                    codes_inner.add(code)
    return codes_all, codes_split, codes_inner


def _labeled_counts(n, jobs):
    parts = _pool_map(_count_labeled_worker,
                      [(n, f) for f in _tree_slices(n, jobs)], jobs)
    c_all = sum(p[0] for p in parts)
    c_split = sum(p[1] for p in parts)
    c_inner = sum(p[2] for p in parts)
    return {"all": c_all, "splitting": c_split, "inner-splitting": c_inner,
            "non-splitting": c_all - c_split}


def _unlabeled_counts(n, jobs):
    parts = _pool_map(_count_unlabeled_worker,
                      [(n, f) for f in _tree_slices(n, jobs)], jobs)
    codes_all, codes_split, codes_inner = set(), set(), set()
    for a, s, i in parts:
        codes_all |= a
        codes_split |= s
        codes_inner |= i
    return {"all": len(codes_all), "splitting": len(codes_split),
            "inner-splitting": len(codes_inner),
            "non-splitting": len(codes_all) - len(codes_split)}


def _labeled_formula_counts(n):
    return {"all": tables.labeled_all_formula(n),
            "splitting": count_splitting_labeled_fast(n),
            "inner-splitting": tables.labeled_inner_splitting_formula(n),
            "non-splitting": None}


def _unlabeled_formula_counts(n):
    return {"all": count_unlabeled_all(n),
            "splitting": None,
            "inner-splitting": tables.unlabeled_inner_splitting_formula(n),
            "non-splitting": None}


def cmd_count(args):
    cap = _env_max_n()
    max_n = _check_n(args.max_n, cap, "--max-n", force=args.force)
    mode = "unlabeled" if args.unlabeled else "labeled"
    rows = []
    mismatches = []
    for n in range(1, max_n + 1):
        if mode == "labeled":
            enum = _labeled_counts(n, args.jobs)
            formula = _labeled_formula_counts(n)
        else:
            enum = (_unlabeled_counts(n, args.jobs)
                    if n <= UNLABELED_ENUM_MAX_N else
                    {label: None for label in CLASS_CHOICES})
            formula = _unlabeled_formula_counts(n)
        for label in CLASS_CHOICES:
            ref = None
            if n <= 5:
                table = tables.REFERENCE_BY_CLASS[label]
                ref = (table.labeled if mode == "labeled" else table.unlabeled)[n - 1]
            elif mode == "unlabeled" and label == "all" and n <= 8:
                ref = tables.UNLABELED_ALL_EXTENDED[n - 1]
            row = {"n": n, "class": label, "enumerated": enum[label],
                   "formula": formula[label], "reference": ref}
            rows.append(row)
            present = [v for v in (enum[label], formula[label], ref) if v is not None]
            if present and any(v != present[0] for v in present):
                mismatches.append({"kind": "count", "n": n, "class": label,
                                   "enumerated": enum[label],
                                   "formula": formula[label],
                                   "reference": ref})
    if args.format == "csv":
        lines = ["n,class,labeled_count,unlabeled_count"]
        for row in rows:
            shown = row["enumerated"] if row["enumerated"] is not None else row["formula"]
            cell = "" if shown is None else str(shown)
            lab = cell if mode == "labeled" else ""
            unl = cell if mode == "unlabeled" else ""
            lines.append(f"{row['n']},{row['class']},{lab},{unl}")
        _emit("\n".join(lines) + "\n", args.out)
    else:
        report = {"command": "count",
                  "parameters": {"max_n": max_n, "mode": mode},
                  "counts": rows,
                  "mismatches": mismatches}
        _emit_report(report, args.out)
    if mismatches:
        print(f"error: {len(mismatches)} count mismatches", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


# -------------------------------------------------------------- conjecture

def _splitting_fast_worker(task):
    n, first = task
    return sum(1 << parent.count(0)
               for parent in enumerate_labeled_rooted_trees(n, first))


def _splitting_unlabeled_worker(task):
    n, first = task
    codes = set()
    for parent in enumerate_labeled_rooted_trees(n, first):
        for color in enumerate_proper_colorings(parent):
            codes.add(canonical_code(ColoredRootedTree(n, parent, color)))
    return codes


def cmd_conjecture(args):
    cap = _env_max_n()
    max_n = _check_n(args.max_n, cap, "--max-n", force=args.force)
    verdicts = []
    mismatches = []
    for n in range(1, max_n + 1):
        slices = [(n, f) for f in _tree_slices(n, args.jobs)]
        if args.which == "splitting-labeled":
            computed = sum(_pool_map(_splitting_fast_worker, slices, args.jobs))
            conjectured = tables.labeled_splitting_conjecture(n)
            cross = _labeled_counts(n, args.jobs)["splitting"] if n <= 5 else None
            if cross is not None and cross != computed:
                mismatches.append({"kind": "route", "n": n,
                                   "enumerated": cross, "formula": computed})
        else:
            parts = _pool_map(_splitting_unlabeled_worker, slices, args.jobs)
            codes = set()
            for p in parts:
                codes |= p
            computed = len(codes)
            conjectured = tables.unlabeled_splitting_conjecture(n)
            cross = None
        agree = computed == conjectured
        if not agree:
            mismatches.append({"kind": "conjecture", "n": n,
                               "computed": computed, "conjectured": conjectured})
        verdicts.append({"n": n, "computed": computed,
                         "conjectured": conjectured, "cross_check": cross,
                         "verdict": "AGREES" if agree else "DIVERGES"})
    report = {
        "command": "conjecture",
        "parameters": {"which": args.which, "max_n": max_n},
        "disclaimer": ("the closed form is conjectural; agreement on the "
                       "tested range is evidence, not proof"),
        "verdicts": verdicts,
        "mismatches": mismatches,
    }
    _emit_report(report, args.out)
    if any(m["kind"] == "route" for m in mismatches):
        return EXIT_MISMATCH
    if any(m["kind"] == "conjecture" for m in mismatches):
        return EXIT_DIVERGENCE
    return EXIT_OK


# ----------------------------------------------------- file-based commands

def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise CliError(EXIT_PARSE, f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise CliError(EXIT_PARSE, f"{path} is not valid JSON: {exc}") from None


def _load_operator(path):
    try:
        return operator_from_dict(_load_json(path))
    except ValueError as exc:
        raise CliError(EXIT_PARSE, f"{path}: {exc}") from None


def cmd_verify(args):
    op = _load_operator(args.file)
    is_rb = verify_rb_identity(op)
    sf_ok = sf_tag = None
    mismatches = []
    if op.weight != 0:
        sf_ok, sf_tag = verify_structure_conditions(normalize_weight(op))
        if sf_ok != is_rb:
            mismatches.append({"kind": "route", "identity": is_rb,
                               "structure_conditions": sf_ok})
    report = {
        "command": "verify",
        "parameters": {"file": os.path.basename(args.file)},
        "n": op.n,
        "weight": str(op.weight),
        "is_rb": is_rb,
        "structure_ok": sf_ok,
        "structure_tag": sf_tag,
        "mismatches": mismatches,
    }
    _emit_report(report, args.out)
    if mismatches:
        return EXIT_MISMATCH
    return EXIT_OK if is_rb else EXIT_VALIDATION


def cmd_classify(args):
    op = _load_operator(args.file)
    cls = classify(op)
    report = {
        "command": "classify",
        "parameters": {"file": os.path.basename(args.file)},
        "n": op.n,
        "weight": str(op.weight),
        "is_rb": cls.is_rb,
        "is_splitting": cls.is_splitting,
        "is_inner_splitting": cls.is_inner_splitting,
        "class_label": cls.class_label,
        "mismatches": [],
    }
    _emit_report(report, args.out)
    return EXIT_OK


def cmd_tree(args):
    op = _load_operator(args.file)
    try:
        form = matrix_to_tree(op)
    except ValueError as exc:
        raise CliError(EXIT_VALIDATION, str(exc)) from None
    doc = colored_tree_to_dict(form.tree)
    doc["weight"] = str(form.weight)
    _emit(json.dumps(doc, indent=2) + "\n", args.out)
    return EXIT_OK


def cmd_matrix(args):
    doc = _load_json(args.file)
    try:
        tree = colored_tree_from_dict(doc)
    except TreeStructureError as exc:
        # well-formed document, but the parent array is not a rooted tree
        raise CliError(EXIT_VALIDATION, f"{args.file}: {exc}") from None
    except ValueError as exc:
        raise CliError(EXIT_PARSE, f"{args.file}: {exc}") from None
    if args.weight is not None:
        w = _parse_weight(args.weight)
    else:
        raw = doc.get("weight", "1")
        try:
            w = rat(raw)
        except (ValueError, TypeError, ZeroDivisionError):
            raise CliError(EXIT_PARSE,
                           f"{args.file}: bad weight field {raw!r}") from None
        if w == 0:
            raise CliError(EXIT_VALIDATION, "weight must be nonzero")
    op = tree_to_matrix(RBTreeForm(tree, w))
    _emit(json.dumps(operator_to_dict(op), indent=2) + "\n", args.out)
    return EXIT_OK


# ----------------------------------------------------------------- theorem3

def _theorem3_worker(task):
    n, first, weight_str, want_lines = task
    w = Fraction(weight_str)
    total = certified = 0
    failures = []
    lines = []
    for parent in enumerate_labeled_rooted_trees(n, first):
        for color in product((WHITE, BLACK), repeat=n):
            op = tree_to_matrix(RBTreeForm(ColoredRootedTree(n, parent, color), w))
            rep = certify(op)
            total += 1
            if rep["certified"]:
                certified += 1
            else:
                failures.append(rep["matrix"])
            if want_lines:
                lines.append(json.dumps(rep, separators=(",", ":")) + "\n")
    return total, certified, failures, lines


def cmd_theorem3(args):
    n = _check_n(args.n, THEOREM3_SAMPLED_MAX_N, force=args.force)
    w = _parse_weight(args.weight)
    want_lines = args.out is not None
    failures = []
    lines = []
    if n <= THEOREM3_EXHAUSTIVE_MAX_N:
        mode = "exhaustive"
        tasks = [(n, first, str(w), want_lines)
                 for first in _tree_slices(n, args.jobs)]
        total = certified = 0
        for part in _pool_map(_theorem3_worker, tasks, args.jobs):
            total += part[0]
            certified += part[1]
            failures.extend(part[2])
            lines.extend(part[3])
    else:
        mode = "sampled"
        rng = random.Random(args.seed)
        total = certified = 0
        for _ in range(args.sample):
            seq = tuple(rng.randrange(n + 1) for _ in range(n - 1))
            parent = prufer_to_parent(seq, n)
            color = tuple(rng.choice((WHITE, BLACK)) for _ in range(n))
            op = tree_to_matrix(RBTreeForm(ColoredRootedTree(n, parent, color), w))
            rep = certify(op)
            total += 1
            if rep["certified"]:
                certified += 1
            else:
                failures.append(rep["matrix"])
            if want_lines:
                lines.append(json.dumps(rep, separators=(",", ":")) + "\n")
    if want_lines:
        _emit("".join(lines), args.out)
    mismatches = [{"kind": "certification", "matrix": m} for m in failures[:20]]
    report = {
        "command": "theorem3",
        "parameters": {"n": n, "weight": str(w), "mode": mode,
                       **({"sample": args.sample, "seed": args.seed}
                          if mode == "sampled" else {})},
        "total": total,
        "certified": certified,
        "failed": len(failures),
        "mismatches": mismatches,
    }
    _emit(json.dumps(report, indent=2) + "\n", None if want_lines else args.out)
    return EXIT_OK if not failures else EXIT_MISMATCH


# --------------------------------------------------------------------- main

def _add_common(sp, *, jobs=True, out=True, force=False):
    if jobs:
        sp.add_argument("--jobs", type=int, default=1,
                        help="worker processes (output is identical for any value)")
    if out:
        sp.add_argument("--out", help="write output to this file instead of stdout")
    if force:
        sp.add_argument("--force", action="store_true",
                        help="override the cost guard on --n/--max-n")


def build_parser():
    p = argparse.ArgumentParser(
        prog="rblab",
        description="Exact enumeration, verification, classification and "
                    "counting of Rota-Baxter operators of nonzero weight on F^n.")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("enumerate", help="stream all operators for one n")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--weight", default="1", help="rational weight p/q (nonzero)")
    sp.add_argument("--class", dest="class_filter", choices=CLASS_CHOICES,
                    default="all")
    sp.add_argument("--format", choices=("json", "csv"), default="json")
    _add_common(sp, force=True)
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("oracle", help="independent identity scan vs enumeration")
    sp.add_argument("--n", type=int, required=True)
    _add_common(sp, force=True)
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("count", help="count tables per class")
    sp.add_argument("--max-n", type=int, default=5)
    sp.add_argument("--unlabeled", action="store_true",
                    help="count up to relabeling instead of labeled")
    sp.add_argument("--format", choices=("json", "csv"), default="json")
    _add_common(sp, force=True)
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("conjecture", help="evidence runs for conjectured counts")
    sp.add_argument("--which", required=True,
                    choices=("splitting-labeled", "splitting-unlabeled"))
    sp.add_argument("--max-n", type=int, default=7)
    _add_common(sp, force=True)
    sp.set_defaults(func=cmd_conjecture)

    sp = sub.add_parser("verify", help="check one operator file")
    sp.add_argument("file")
    _add_common(sp, jobs=False)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("classify", help="classify one operator file")
    sp.add_argument("file")
    _add_common(sp, jobs=False)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("tree", help="operator file to colored tree file")
    sp.add_argument("file")
    _add_common(sp, jobs=False)
    sp.set_defaults(func=cmd_tree)

    sp = sub.add_parser("matrix", help="colored tree file to operator file")
    sp.add_argument("file")
    sp.add_argument("--weight", default=None,
                    help="override the tree file's weight field")
    _add_common(sp, jobs=False)
    sp.set_defaults(func=cmd_matrix)

    sp = sub.add_parser("theorem3", help="certify the idempotent basis")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--weight", default="1")
    sp.add_argument("--sample", type=int, default=200,
                    help="sample size for n beyond the exhaustive range")
    sp.add_argument("--seed", type=int, default=0)
    _add_common(sp, force=True)
    sp.set_defaults(func=cmd_theorem3)

    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    t0 = time.perf_counter()
    try:
        code = args.func(args)
    except CliError as exc:
        print(f"error: {exc.message}", file=sys.stderr)
        code = exc.code
    print(f"# elapsed: {time.perf_counter() - t0:.3f}s", file=sys.stderr)
    return code
