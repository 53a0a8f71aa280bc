use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use simcoal::{
    make_order, parse_aut, parse_native, parse_term, unify_alphabets, ActionPartition,
    FunctorialOrder, Lts, Semantics,
};

use crate::{Inputs, Relate, SemanticsArg};

pub fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

pub fn load_lts(path: &Path) -> Result<Lts> {
    let text = read(path)?;
    let parsed = match path.extension().and_then(|e| e.to_str()) {
        Some("aut") => parse_aut(&text),
        Some("term") => parse_term(&text),
        _ => parse_native(&text),
    };
    parsed.with_context(|| format!("{}", path.display()))
}

/// Both systems over one alphabet.
pub fn load_pair(inputs: &Inputs) -> Result<(Lts, Lts)> {
    let x = load_lts(&inputs.lhs)?;
    let y = match &inputs.rhs {
        Some(p) => load_lts(p)?,
        None => x.clone(),
    };
    let (ux, uy, changed) = unify_alphabets(&x, &y)?;
    if changed {
        if inputs.strict_alphabet {
            bail!(
                "alphabets differ: {:?} vs {:?} (--strict-alphabet)",
                x.alphabet(),
                y.alphabet()
            );
        }
        eprintln!(
            "warning: alphabets differ; comparing over {:?} with missing actions disabled",
            ux.alphabet()
        );
    }
    Ok((ux, uy))
}

pub fn load_partition(path: Option<&Path>) -> Result<Option<ActionPartition>> {
    path.map(|p| {
        ActionPartition::from_json(&read(p)?).with_context(|| format!("{}", p.display()))
    })
    .transpose()
}

pub fn semantics(arg: SemanticsArg, partition: Option<&ActionPartition>, alphabet: &[String]) -> Result<Semantics> {
    Ok(match arg {
        SemanticsArg::Plain => Semantics::Plain,
        SemanticsArg::Reverse => Semantics::Reverse,
        SemanticsArg::Conformance => Semantics::Conformance,
        SemanticsArg::Bisim => Semantics::Bisim,
        SemanticsArg::Cc => {
            let Some(p) = partition else {
                bail!("--semantics cc needs --partition");
            };
            Semantics::CovContra(p.validate(alphabet)?)
        }
    })
}

/// The order selected by `--semantics` or `--order`.
pub fn order(relate: &Relate, alphabet: &[String]) -> Result<FunctorialOrder> {
    let partition = load_partition(relate.partition.as_deref())?;
    match (&relate.semantics, &relate.order) {
        (Some(s), None) => Ok(semantics(*s, partition.as_ref(), alphabet)?.order()),
        (None, Some(expr)) => Ok(make_order(expr, alphabet, partition.as_ref())?),
        _ => bail!("give exactly one of --semantics and --order"),
    }
}

pub fn state(lts: &Lts, key: Option<&str>) -> Result<usize> {
    match key {
        Some(k) => lts
            .resolve_state(k)
            .with_context(|| format!("no state `{k}` (state count {})", lts.state_count())),
        None => match lts.initial() {
            Some(s) => Ok(s),
            None if lts.state_count() > 0 => Ok(0),
            None => bail!("the system has no states"),
        },
    }
}

/// `root` for the initial state, otherwise the state's name or index.
pub fn label(lts: &Lts, s: usize) -> String {
    if lts.initial() == Some(s) {
        "root".into()
    } else {
        lts.state_label(s)
    }
}
