use std::collections::BTreeSet;
use std::fs;
use std::io::Write;
use std::path::Path;
use std::time::{Duration, Instant};

use anyhow::{anyhow, bail, Context};
use heffter::construct::five_diag::five_diag_params;
use heffter::construct::tight::two_row_params;
use heffter::construct::{self, exhaustive_search_with};
use heffter::decomp::{self, DifferenceFamily, LineKind};
use heffter::orderings::{self, natural_orderings, SearchOutcome};
use heffter::topology::{self, build_rotation, trace_faces};
use heffter::verify::{check_integer, verify};
use heffter::{
    ArrayDoc, HeffterError, HeffterParams, OrderingPair, SearchBudget, SkeletonConstraint,
};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::render;
use crate::{
    BudgetArgs, Check, Cli, Command, ConstructArgs, Family, Format, OrderingChoice, SearchArgs,
    Status, SweepFamily, Which,
};

const DEFAULT_KNIGHT_CANDIDATES: u64 = 10_000_000;

pub fn run(cli: &Cli) -> anyhow::Result<Status> {
    match &cli.command {
        Command::Construct(args) => construct(cli, args),
        Command::Verify { file, integer, sma } => verify_cmd(cli, file, *integer, *sma),
        Command::Order { file, mode, budget } => {
            let choice = if mode.search {
                OrderingChoice::Search
            } else if mode.knight {
                OrderingChoice::Knight
            } else {
                OrderingChoice::Natural
            };
            order(cli, file, choice, budget)
        }
        Command::Knight {
            file,
            max_candidates,
        } => knight(cli, file, *max_candidates),
        Command::Decomp {
            file,
            which,
            develop,
            orderings,
            budget,
        } => decomp_cmd(cli, file, *which, *develop, *orderings, budget),
        Command::Biembed {
            file,
            orderings,
            faces,
            budget,
        } => biembed(cli, file, *orderings, *faces, budget),
        Command::Cover {
            file_a,
            file_b,
            lambda,
            orderings,
        } => cover(cli, file_a, file_b, *lambda, *orderings),
        Command::Search(args) => search(cli, args),
        Command::Sweep {
            family,
            from,
            to,
            checks,
        } => sweep(cli, *family, *from, *to, checks),
    }
}

fn load(cli: &Cli, path: &Path) -> anyhow::Result<ArrayDoc> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let is_csv = path
        .extension()
        .is_some_and(|e| e.eq_ignore_ascii_case("csv"));
    let doc = if is_csv {
        let (Some(lambda), Some(t)) = (cli.csv_lambda, cli.csv_t) else {
            bail!(
                "{}: CSV input needs --csv-lambda and --csv-t",
                path.display()
            );
        };
        ArrayDoc::from_csv(&text, lambda, t)
    } else {
        ArrayDoc::from_json(&text)
    };
    let doc = doc.with_context(|| format!("{}", path.display()))?;
    doc.params
        .validate()
        .with_context(|| format!("{}: params", path.display()))?;
    Ok(doc)
}

/// Writes to stdout; a closed pipe ends output quietly.
fn out(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn emit(cli: &Cli, value: &Value, pretty: impl FnOnce() -> String) {
    if cli.pretty {
        out(&pretty());
    } else {
        out(&format!("{value}\n"));
    }
}

fn budget_of(b: &BudgetArgs) -> anyhow::Result<SearchBudget> {
    let nodes = b.max_nodes.unwrap_or(SearchBudget::DEFAULT_NODES);
    Ok(SearchBudget::new(nodes, Duration::from_secs(b.time_cap))?)
}

fn emit_doc(cli: &Cli, doc: &ArrayDoc, format: Format) {
    match format {
        Format::Csv => out(&doc.to_csv()),
        Format::Json if cli.pretty => out(&render::grid(doc)),
        Format::Json => out(&(doc.to_json() + "\n")),
    }
}

fn construct(cli: &Cli, args: &ConstructArgs) -> anyhow::Result<Status> {
    let need = |x: Option<usize>, name: &str| x.ok_or_else(|| anyhow!("--{name} is required"));
    let doc = match args.family {
        Family::TwoByNEven => {
            let n = need(args.n, "n")?;
            ArrayDoc::new(two_row_params(n), construct::build_2xn_even(n)?)
        }
        Family::TwoByNOdd => {
            let n = need(args.n, "n")?;
            ArrayDoc::new(two_row_params(n), construct::build_2xn_odd(n)?)
        }
        Family::FiveDiag => {
            let n = need(args.n, "n")?;
            ArrayDoc::new(five_diag_params(n), construct::build_5diag(n)?)
        }
        Family::Project => {
            let input = load(
                cli,
                args.input
                    .as_deref()
                    .ok_or_else(|| anyhow!("--input is required"))?,
            )?;
            let (a, p) =
                construct::project(&input.array, &input.params, need(args.divisor, "divisor")?)?;
            ArrayDoc::new(p, a)
        }
        Family::Compose => {
            let input = load(
                cli,
                args.input
                    .as_deref()
                    .ok_or_else(|| anyhow!("--input is required"))?,
            )?;
            let (a, p) = construct::compose(
                &input.array,
                &input.params,
                need(args.l1, "l1")?,
                need(args.l2, "l2")?,
                need(args.a1, "a1")?,
                need(args.a2, "a2")?,
            )?;
            ArrayDoc::new(p, a)
        }
        Family::Search => {
            let p = HeffterParams::new(
                need(args.m, "m")?,
                need(args.n, "n")?,
                need(args.s, "s")?,
                need(args.k, "k")?,
                need(args.lambda, "lambda")?,
                need(args.t, "t")?,
            )?;
            let (result, cert) = run_search(p, &args.diagonals, args.simple, &args.budget)?;
            eprintln!("{}", json!({ "certificate": cert }));
            match result {
                Some(doc) => doc,
                None => {
                    return Ok(if cert.complete {
                        Status::Fail
                    } else {
                        Status::Budget
                    })
                }
            }
        }
    };
    emit_doc(cli, &doc, args.format);
    Ok(Status::Ok)
}

fn run_search(
    p: HeffterParams,
    diagonals: &[usize],
    simple: bool,
    budget: &BudgetArgs,
) -> anyhow::Result<(Option<ArrayDoc>, heffter::Certificate)> {
    let constraint =
        (!diagonals.is_empty()).then(|| SkeletonConstraint::Diagonals(diagonals.to_vec()));
    let res = exhaustive_search_with(&p, constraint.as_ref(), &budget_of(budget)?, simple, |_| {
        true
    })?;
    Ok((res.array.map(|a| ArrayDoc::new(p, a)), res.certificate))
}

fn search(cli: &Cli, args: &SearchArgs) -> anyhow::Result<Status> {
    let q = &args.params;
    let p = HeffterParams::new(q.m, q.n, q.s, q.k, q.lambda, q.t)?;
    let (result, cert) = run_search(p, &args.diagonals, args.simple, &args.budget)?;
    let value = json!({
        "result": result.as_ref().map(ArrayDoc::to_value),
        "certificate": cert,
    });
    emit(cli, &value, || {
        let mut out = match &result {
            Some(doc) => render::grid(doc),
            None => "no array found\n".to_string(),
        };
        out += &format!("complete: {}  nodes: {}\n", cert.complete, cert.nodes);
        out
    });
    Ok(match (&result, cert.complete) {
        (Some(_), _) => Status::Ok,
        (None, true) => Status::Fail,
        (None, false) => Status::Budget,
    })
}

fn verify_cmd(cli: &Cli, file: &Path, integer: bool, sma: bool) -> anyhow::Result<Status> {
    let doc = load(cli, file)?;
    let report = verify(&doc.array, &doc.params)?;
    let pass = report.is_heffter() && (!integer || report.is_integer) && (!sma || report.is_sma);
    let value = serde_json::to_value(&report)?;
    emit(cli, &value, || render::report(&report));
    Ok(if pass { Status::Ok } else { Status::Fail })
}

/// Orderings for `doc`, or the status to exit with when none is available.
fn pick_orderings(
    doc: &ArrayDoc,
    choice: OrderingChoice,
    budget: &BudgetArgs,
) -> anyhow::Result<Result<OrderingPair, Status>> {
    let a = &doc.array;
    let outcome = match choice {
        OrderingChoice::Natural => return Ok(Ok(natural_orderings(a))),
        OrderingChoice::Search => {
            let nodes = budget.max_nodes.unwrap_or(SearchBudget::DEFAULT_NODES);
            orderings::find_simple_orderings(a, doc.params.modulus(), nodes)
        }
        OrderingChoice::Knight => {
            let cap = budget.max_nodes.unwrap_or(DEFAULT_KNIGHT_CANDIDATES);
            match orderings::knight_tour_bounded(a, cap) {
                SearchOutcome::Found(o) => {
                    SearchOutcome::Found(orderings::orderings_from_orientations(a, &o)?)
                }
                SearchOutcome::Exhausted => SearchOutcome::Exhausted,
                SearchOutcome::Incomplete => SearchOutcome::Incomplete,
            }
        }
    };
    Ok(match outcome {
        SearchOutcome::Found(op) => Ok(op),
        SearchOutcome::Exhausted => {
            eprintln!("no suitable orderings exist");
            Err(Status::Fail)
        }
        SearchOutcome::Incomplete => {
            eprintln!("ordering search stopped at its budget");
            Err(Status::Budget)
        }
    })
}

fn order(
    cli: &Cli,
    file: &Path,
    choice: OrderingChoice,
    budget: &BudgetArgs,
) -> anyhow::Result<Status> {
    let doc = load(cli, file)?;
    let op = match pick_orderings(&doc, choice, budget)? {
        Ok(op) => op,
        Err(status) => return Ok(status),
    };
    let v = doc.params.modulus();
    let simple = op.is_simple(&doc.array, v);
    let value = json!({
        "simple": simple,
        "compatible": orderings::are_compatible(&op),
        "orderings": op.to_value(&doc.array, v),
    });
    emit(cli, &value, || render::orderings(&doc, &op));
    Ok(if simple { Status::Ok } else { Status::Fail })
}

fn knight(cli: &Cli, file: &Path, max_candidates: Option<u64>) -> anyhow::Result<Status> {
    let doc = load(cli, file)?;
    let outcome = orderings::knight_tour_bounded(
        &doc.array,
        max_candidates.unwrap_or(DEFAULT_KNIGHT_CANDIDATES),
    );
    let (status, complete) = match &outcome {
        SearchOutcome::Found(_) => (Status::Ok, true),
        SearchOutcome::Exhausted => (Status::Fail, true),
        SearchOutcome::Incomplete => (Status::Budget, false),
    };
    let solution = outcome.found();
    let value = json!({ "solution": solution, "complete": complete });
    emit(cli, &value, || match &solution {
        Some(o) => format!("rows: {:?}\ncols: {:?}\n", o.rows, o.cols),
        None => format!("no solution (complete: {complete})\n"),
    });
    Ok(status)
}

fn decomp_cmd(
    cli: &Cli,
    file: &Path,
    which: Which,
    develop: bool,
    choice: OrderingChoice,
    budget: &BudgetArgs,
) -> anyhow::Result<Status> {
    let doc = load(cli, file)?;
    let op = match pick_orderings(&doc, choice, budget)? {
        Ok(op) => op,
        Err(status) => return Ok(status),
    };
    let p = doc.params;
    let v = p.modulus();
    let kind = match which {
        Which::Rows => LineKind::Rows,
        Which::Columns => LineKind::Columns,
    };
    let blocks = match decomp::line_cycles(&doc.array, &op, kind, v) {
        Ok(b) => b,
        Err(e @ HeffterError::NotSimple { .. }) => {
            eprintln!("{e}");
            return Ok(Status::Fail);
        }
        Err(e) => return Err(e.into()),
    };
    let family = DifferenceFamily {
        blocks,
        v,
        t: p.t,
        lambda: p.lambda,
    };
    let is_df = decomp::check_difference_family(&family);
    let mut value = json!({
        "which": kind,
        "v": v,
        "t": p.t,
        "lambda": p.lambda,
        "blocks": family.blocks.iter().map(|b| &b.vertices).collect::<Vec<_>>(),
        "difference_family": is_df,
    });
    let mut pass = is_df;
    if develop {
        let cycles = decomp::develop(&family);
        let ok = decomp::check_decomposition(&cycles, v, p.t, p.lambda);
        pass &= ok;
        value["cycles"] = json!(cycles.iter().map(|c| &c.vertices).collect::<Vec<_>>());
        value["decomposition"] = json!(ok);
    }
    emit(cli, &value, || render::decomposition(&value));
    Ok(if pass { Status::Ok } else { Status::Fail })
}

fn biembed(
    cli: &Cli,
    file: &Path,
    choice: OrderingChoice,
    with_faces: bool,
    budget: &BudgetArgs,
) -> anyhow::Result<Status> {
    let doc = load(cli, file)?;
    let op = match pick_orderings(&doc, choice, budget)? {
        Ok(op) => op,
        Err(status) => return Ok(status),
    };
    let rs = match build_rotation(&doc.array, &op, doc.params.modulus()) {
        Ok(rs) => rs,
        Err(e @ HeffterError::Incompatible) => {
            eprintln!("{e}");
            return Ok(Status::Fail);
        }
        Err(e) => return Err(e.into()),
    };
    let fs = trace_faces(&rs)?;
    let mut value = fs.summary();
    let pass = value["two_colorable"].as_bool().unwrap_or(false) && fs.degenerate_faces == 0;
    if with_faces {
        value["faces"] = json!(fs
            .faces
            .iter()
            .map(|f| json!({ "color": f.color, "vertices": f.vertices() }))
            .collect::<Vec<_>>());
    }
    emit(cli, &value, || render::summary(&value));
    Ok(if pass { Status::Ok } else { Status::Fail })
}

fn cover(
    cli: &Cli,
    file_a: &Path,
    file_b: &Path,
    lambda: usize,
    choice: OrderingChoice,
) -> anyhow::Result<Status> {
    let a = load(cli, file_a)?;
    let b = load(cli, file_b)?;
    let (va, vb) = (a.params.modulus(), b.params.modulus());
    if va != lambda * vb {
        bail!("modulus of A is {va}, expected {lambda} x {vb}");
    }
    let budget = BudgetArgs {
        max_nodes: None,
        time_cap: 60,
    };
    let op = match pick_orderings(&b, choice, &budget)? {
        Ok(op) => op,
        Err(status) => return Ok(status),
    };
    let covers = topology::verify_covering(&a.array, &a.params, &b.array, &b.params, &op)?;
    let value = json!({ "covers": covers, "v_a": va, "v_b": vb });
    emit(cli, &value, || format!("covers: {covers}\n"));
    Ok(if covers { Status::Ok } else { Status::Fail })
}

fn sweep_sizes(family: SweepFamily, from: usize, to: usize) -> Vec<usize> {
    let (residue, least) = match family {
        SweepFamily::TwoByNEven => (2, 6),
        SweepFamily::TwoByNOdd => (1, 5),
        SweepFamily::FiveDiag => (3, 7),
    };
    (from.max(least)..=to)
        .filter(|n| n % 4 == residue)
        .collect()
}

fn sweep_one(family: SweepFamily, n: usize, checks: &BTreeSet<Check>) -> Value {
    let start = Instant::now();
    let built = match family {
        SweepFamily::TwoByNEven => {
            construct::build_2xn_even(n).map(|a| (a, two_row_params(n), None))
        }
        SweepFamily::TwoByNOdd => construct::build_2xn_odd(n).map(|a| (a, two_row_params(n), None)),
        SweepFamily::FiveDiag => {
            construct::build_5diag(n).map(|a| (a, five_diag_params(n), Some(5)))
        }
    };
    let (a, p, width) = match built {
        Ok(x) => x,
        Err(e) => {
            return json!({ "n": n, "pass": false, "error": e.to_string(), "ms": start.elapsed().as_millis() as u64 })
        }
    };
    let mut results = serde_json::Map::new();
    let mut pass = true;
    for check in checks {
        let outcome = match check {
            Check::Verify => verify(&a, &p).map(|r| r.is_heffter()).ok(),
            Check::Simple => Some(orderings::is_globally_simple(&a, p.modulus())),
            Check::Diagonal => width.map(|k| a.is_cyclically_k_diagonal(k)),
            Check::Integer => check_integer(&a, &p).ok(),
        };
        pass &= outcome.unwrap_or(true);
        results.insert(check_name(*check).into(), json!(outcome));
    }
    json!({ "n": n, "pass": pass, "checks": results, "ms": start.elapsed().as_millis() as u64 })
}

fn check_name(c: Check) -> &'static str {
    match c {
        Check::Verify => "verify",
        Check::Simple => "simple",
        Check::Diagonal => "diagonal",
        Check::Integer => "integer",
    }
}

fn sweep(
    cli: &Cli,
    family: SweepFamily,
    from: usize,
    to: usize,
    checks: &[Check],
) -> anyhow::Result<Status> {
    let checks: BTreeSet<Check> = checks.iter().copied().collect();
    let rows: Vec<Value> = sweep_sizes(family, from, to)
        .into_par_iter()
        .map(|n| sweep_one(family, n, &checks))
        .collect();
    let pass = rows.iter().all(|r| r["pass"].as_bool() == Some(true));
    let value = json!({ "rows": rows, "all_pass": pass });
    emit(cli, &value, || {
        render::sweep(
            &rows,
            &checks.iter().map(|&c| check_name(c)).collect::<Vec<_>>(),
        )
    });
    Ok(if pass { Status::Ok } else { Status::Fail })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweep_sizes_follow_congruences() {
        assert_eq!(
            sweep_sizes(SweepFamily::FiveDiag, 1, 20),
            vec![7, 11, 15, 19]
        );
        assert_eq!(sweep_sizes(SweepFamily::TwoByNEven, 6, 14), vec![6, 10, 14]);
        assert_eq!(sweep_sizes(SweepFamily::TwoByNOdd, 0, 9), vec![5, 9]);
        assert!(sweep_sizes(SweepFamily::FiveDiag, 20, 10).is_empty());
    }

    #[test]
    fn sweep_row_reports_each_check() {
        let checks: BTreeSet<Check> = [Check::Verify, Check::Diagonal].into_iter().collect();
        let row = sweep_one(SweepFamily::FiveDiag, 7, &checks);
        assert_eq!(row["pass"], json!(true));
        assert_eq!(row["checks"]["diagonal"], json!(true));
        let row = sweep_one(SweepFamily::TwoByNEven, 10, &checks);
        assert_eq!(row["checks"]["diagonal"], Value::Null);
    }
}
