use std::fs;

use anyhow::{bail, Context, Result};
use serde_json::json;
use simcoal::engine::{
    brute_force_similarity, classical_clause, greatest_classical_sim, greatest_coalgebraic_sim,
    holds,
};
use simcoal::lts::default_alphabet;
use simcoal::order::{check_functorial, check_preorder};
use simcoal::stability::{
    check_commute, check_composition_stability, check_factored_lift, check_interchange,
    check_left_stable, check_lift_transpose, check_op_duality, check_right_stable, check_stable,
    confirm_witness, CompositionLaw,
};
use simcoal::{
    make_order, write_aut, write_native, Budget, CheckReport, Criterion, FunctorialOrder, Law,
    Mode, Relation,
};

use crate::input::{self, label, load_lts, load_pair, load_partition, state};
use crate::{
    CheckArgs, ConvertArgs, Format, LawArg, ModeArg, OracleArgs, Output, PreorderArgs,
    StabilityArgs, TargetFormat,
};

fn mode(m: ModeArg) -> Mode {
    match m {
        ModeArg::Fast => Mode::Fast,
        ModeArg::Generic => Mode::Generic,
    }
}

/// Text goes to stdout unless `--out` is given; structured output is pretty
/// JSON, to the same place.
fn emit(output: &Output, text: String, value: serde_json::Value) -> Result<()> {
    let body = match output.format {
        Format::Text => text,
        Format::Structured => serde_json::to_string_pretty(&value)? + "\n",
    };
    match &output.out {
        Some(path) => fs::write(path, body).with_context(|| format!("cannot write {}", path.display())),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

pub fn check(args: CheckArgs) -> Result<bool> {
    let (x, y) = load_pair(&args.inputs)?;
    let order = input::order(&args.relate, x.alphabet())?;
    let xs = state(&x, args.state.as_deref())?;
    let ys = state(&y, args.rhs_state.as_deref())?;
    let criterion = Criterion::Order(order.clone(), mode(args.relate.mode));
    let result = holds(&x, xs, &y, ys, &criterion)?;
    let (lx, ly) = (label(&x, xs), label(&y, ys));
    emit(
        &args.output,
        format!("{lx} ⊑ {ly}: {result}\n"),
        json!({
            "order": order.name(),
            "lhs_state": lx,
            "rhs_state": ly,
            "holds": result,
        }),
    )?;
    Ok(result)
}

pub fn preorder(args: PreorderArgs) -> Result<bool> {
    let (x, y) = load_pair(&args.inputs)?;
    let order = input::order(&args.relate, x.alphabet())?;
    let rel = greatest_coalgebraic_sim(&x, &y, &order, mode(args.relate.mode))?;
    let text = if args.pairs {
        rel.pairs()
            .map(|(a, b)| format!("{} ⊑ {}\n", x.state_label(a), y.state_label(b)))
            .collect()
    } else {
        rel.to_string()
    };
    emit(
        &args.output,
        text,
        json!({ "order": order.name(), "relation": rel }),
    )?;
    Ok(true)
}

fn want(sizes: &[usize], n: usize, law: LawArg) -> Result<()> {
    if sizes.len() != n {
        bail!("{law:?} takes {n} sizes, got {}", sizes.len());
    }
    if sizes.contains(&0) {
        bail!("carrier sizes must be positive");
    }
    Ok(())
}

fn second(name: &str, arg: &Option<String>, alphabet: &[String], partition: Option<&simcoal::ActionPartition>) -> Result<FunctorialOrder> {
    let Some(text) = arg else {
        bail!("this law needs --{name}");
    };
    Ok(make_order(text, alphabet, partition)?)
}

pub fn stability(args: StabilityArgs) -> Result<bool> {
    let alphabet = default_alphabet(args.alphabet);
    let partition = load_partition(args.partition.as_deref())?;
    let p = partition.as_ref();
    let order = make_order(&args.order, &alphabet, p)?;
    let mut budget = Budget::default();
    if let Some(n) = args.budget {
        budget.instances = n;
    }
    budget.sample_seed = args.seed;
    let (s, k, b) = (&args.sizes[..], args.alphabet, &budget);
    let law = args.law;
    let size4 = || [s[0], s[1], s[2], s[3]];

    // The report, plus the orders its witness refers to.
    let (report, confirm_with): (CheckReport, Vec<FunctorialOrder>) = match law {
        LawArg::Preorder => {
            want(s, 1, law)?;
            (check_preorder(&order, s[0], k, b)?, vec![order])
        }
        LawArg::Functorial => {
            want(s, 2, law)?;
            (check_functorial(&order, s[0], s[1], k, b)?, vec![order])
        }
        LawArg::RightStable => {
            want(s, 2, law)?;
            (check_right_stable(&order, s[0], s[1], k, b)?, vec![order])
        }
        LawArg::LeftStable => {
            want(s, 2, law)?;
            (check_left_stable(&order, s[0], s[1], k, b)?, vec![order])
        }
        LawArg::Stable => {
            want(s, 4, law)?;
            (check_stable(&order, size4(), k, b)?, vec![order])
        }
        LawArg::Interchange => {
            want(s, 2, law)?;
            (check_interchange(&order, s[0], s[1], k, b)?, vec![order])
        }
        LawArg::Commute => {
            want(s, 1, law)?;
            let other = second("with", &args.with, &alphabet, p)?;
            (check_commute(&order, &other, s[0], k, b)?, vec![order, other])
        }
        LawArg::CompositionRightStable | LawArg::CompositionLeftStable | LawArg::CompositionStable => {
            let (cl, n) = match law {
                LawArg::CompositionRightStable => (CompositionLaw::RightStable, 2),
                LawArg::CompositionLeftStable => (CompositionLaw::LeftStable, 2),
                _ => (CompositionLaw::Stable, 4),
            };
            want(s, n, law)?;
            let other = second("with", &args.with, &alphabet, p)?;
            let composite = FunctorialOrder::compose(order.clone(), other.clone())?;
            (check_composition_stability(&order, &other, cl, s, k, b)?, vec![composite])
        }
        LawArg::FactoredLift => {
            want(s, 2, law)?;
            let left = second("left", &args.left, &alphabet, p)?;
            let right = second("right", &args.right, &alphabet, p)?;
            (check_factored_lift(&order, &left, &right, s[0], s[1], k, b)?, vec![order, left, right])
        }
        LawArg::OpDuality => {
            want(s, 4, law)?;
            (check_op_duality(&order, size4(), k, b)?, vec![order])
        }
        LawArg::LiftTranspose => {
            want(s, 2, law)?;
            (check_lift_transpose(&order, s[0], s[1], k, b)?, vec![order])
        }
    };

    let mut text = report.to_string();
    if let Some(confirmed) = confirmation(&report, &confirm_with)? {
        text += &format!("witness confirmed independently: {confirmed}\n");
    }
    emit(&args.output, text, serde_json::to_value(&report)?)?;
    Ok(report.passed())
}

/// Re-checks the failing witness by whole-space search. Interchange and
/// op-duality failures are carried by a part; the part is confirmed.
fn confirmation(report: &CheckReport, orders: &[FunctorialOrder]) -> Result<Option<bool>> {
    if !report.failed() {
        return Ok(None);
    }
    let target = match report.law {
        Law::Interchange | Law::OpDuality => match report.parts.iter().find(|p| p.failed()) {
            Some(p) => p,
            None => return Ok(None),
        },
        _ => report,
    };
    if target.witness.is_none() {
        return Ok(None);
    }
    // Op-duality parts are plain stability reports, on the order or its
    // opposite; the part names the one that failed.
    let owned: Vec<FunctorialOrder> = if report.law == Law::OpDuality {
        let o = &orders[0];
        let which = if target.orders.first().map(String::as_str) == Some(o.name()) {
            o.clone()
        } else {
            FunctorialOrder::opposite(o.clone())
        };
        vec![which]
    } else {
        orders.to_vec()
    };
    let refs: Vec<&FunctorialOrder> = owned.iter().collect();
    Ok(Some(confirm_witness(target, &refs)?))
}

pub fn oracle(args: OracleArgs) -> Result<bool> {
    let (x, y) = load_pair(&args.inputs)?;
    let partition = load_partition(args.partition.as_deref())?;
    let sem = input::semantics(args.semantics, partition.as_ref(), x.alphabet())?;
    let order = sem.order();
    let classical = greatest_classical_sim(&x, &y, &sem)?;
    let generic = greatest_coalgebraic_sim(&x, &y, &order, Mode::Generic)?;
    let fast = greatest_coalgebraic_sim(&x, &y, &order, Mode::Fast)?;
    let brute = brute_force_similarity(&x, &y, |r, a, b| classical_clause(&sem, r, &x, a, &y, b))?;
    let agree = [&generic, &fast, &brute].iter().all(|r| **r == classical);
    let line = |name: &str, r: &Relation| format!("{name}: {} pairs{}\n", r.len(), if *r == classical { "" } else { " (differs)" });
    let text = format!(
        "{}{}{}{}agree: {agree}\n",
        line("classical", &classical),
        line("generic", &generic),
        line("fast", &fast),
        line("brute-force", &brute),
    );
    emit(
        &args.output,
        text,
        json!({
            "semantics": sem.name(),
            "agree": agree,
            "classical": classical,
            "generic": generic,
            "fast": fast,
            "brute_force": brute,
        }),
    )?;
    Ok(agree)
}

pub fn convert(args: ConvertArgs) -> Result<bool> {
    let lts = load_lts(&args.input)?;
    let target = match (args.to, &args.out) {
        (Some(t), _) => t,
        (None, Some(path)) => match path.extension().and_then(|e| e.to_str()) {
            Some("aut") => TargetFormat::Aut,
            Some("json") => TargetFormat::Native,
            Some("term") => bail!("writing term files is not supported"),
            _ => bail!("cannot tell the target format from {}; pass --to", path.display()),
        },
        (None, None) => bail!("pass --to or --out"),
    };
    let body = match target {
        TargetFormat::Aut => write_aut(&lts),
        TargetFormat::Native => write_native(&lts),
    };
    match &args.out {
        Some(path) => fs::write(path, body).with_context(|| format!("cannot write {}", path.display()))?,
        None => print!("{body}"),
    }
    Ok(true)
}
