use antichain_core::adaptive::{exact_f_with, solve_k2, solve_traced, theorem3_bound, ExactFOptions};
use antichain_core::adversary::{confusion_pair, k2_first_query_certificate, AdversaryState};
use antichain_core::combinatorics::{
    antichain_pair_count, exact_h_search, g_bruteforce, g_formula,
};
use antichain_core::nonadaptive::{answer_vector, build_family, decode, h_formula, verify_identifying};
use antichain_core::sample::random_antichain;
use antichain_core::set::{enumerate_antichains, minimal_covers, ENUMERATION_MAX_N};
use antichain_core::{Antichain, Error, OracleState, QueryOracle, SetFamily, SubsetMask};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::de::DeserializeOwned;
use serde_json::{json, Value};

use crate::args::{Adaptive, Adversary, Cli, Comb, Command, HiddenSource, Nonadaptive, PlayStrategy};

pub enum Failure {
    Core(Error),
    /// Malformed JSON arguments.
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Core(e) if e.is_resource() => 2,
            _ => 1,
        }
    }

    pub fn to_json(&self) -> Value {
        let (kind, message) = match self {
            Failure::Core(e) => (
                match e {
                    Error::Dimension { .. } => "dimension",
                    Error::Contract(_) => "contract",
                    Error::UnsupportedRegime(_) => "unsupported_regime",
                    Error::Decode(_) => "decode",
                    Error::Resource(_) => "resource",
                    Error::BudgetExceeded { .. } => "budget_exceeded",
                },
                e.to_string(),
            ),
            Failure::Input(m) => ("input", m.clone()),
        };
        let mut err = json!({ "kind": kind, "message": message });
        if let Failure::Core(Error::BudgetExceeded { budget, lower, upper }) = self {
            err["budget"] = json!(budget);
            err["lower"] = json!(lower);
            err["upper"] = json!(upper);
        }
        json!({ "error": err })
    }
}

type Out = Result<Value, Failure>;

/// Exact integers: a JSON number when it fits in 64 bits, a decimal string otherwise.
fn big(x: u128) -> Value {
    u64::try_from(x).map_or_else(|_| json!(x.to_string()), |v| json!(v))
}

fn parse<T: DeserializeOwned>(what: &str, text: &str) -> Result<T, Failure> {
    serde_json::from_str(text).map_err(|e| Failure::Input(format!("--{what}: {e}")))
}

fn check_n(what: &str, got: usize, n: usize) -> Result<(), Failure> {
    if got != n {
        return Err(Failure::Input(format!("--{what} is over [{got}] but --n is {n}")));
    }
    Ok(())
}

fn hidden_from(src_hidden: Option<&str>, random: bool, seed: u64, n: usize, k: usize) -> Result<Antichain, Failure> {
    match src_hidden {
        Some(text) => {
            let h: Antichain = parse("hidden", text)?;
            check_n("hidden", h.n(), n)?;
            if h.len() != k {
                return Err(Failure::Input(format!("--hidden has {} members, expected {k}", h.len())));
            }
            Ok(h)
        }
        None if random => Ok(random_antichain(&mut ChaCha8Rng::seed_from_u64(seed), n, k)?),
        None => Err(Failure::Input("pass --hidden or --random".into())),
    }
}

fn hidden(src: &HiddenSource, seed: u64, n: usize, k: usize) -> Result<Antichain, Failure> {
    hidden_from(src.hidden.as_deref(), src.random, seed, n, k)
}

pub fn run(cli: &Cli) -> Out {
    let seed = cli.seed;
    match &cli.command {
        Command::Nonadaptive(c) => nonadaptive(c, seed),
        Command::Adaptive(c) => adaptive(c, seed),
        Command::Adversary(c) => adversary(c),
        Command::Comb(c) => comb(c),
    }
}

fn nonadaptive(c: &Nonadaptive, seed: u64) -> Out {
    match c {
        Nonadaptive::Build(nk) => {
            let f = build_family(nk.n, nk.k)?;
            Ok(json!({
                "n": nk.n, "k": nk.k,
                "h": h_formula(nk.n, nk.k)?,
                "size": f.len(),
                "family": f,
            }))
        }
        Nonadaptive::Verify { nk, family } => {
            let f = match family {
                Some(text) => {
                    let f: SetFamily = parse("family", text)?;
                    check_n("family", f.n(), nk.n)?;
                    f
                }
                None => build_family(nk.n, nk.k)?,
            };
            Ok(json!({
                "n": nk.n, "k": nk.k,
                "size": f.len(),
                "identifying": verify_identifying(&f, nk.n, nk.k)?,
            }))
        }
        Nonadaptive::Decode {
            nk,
            answers,
            hidden,
            random,
        } => {
            let queries = build_family(nk.n, nk.k)?;
            let (answers, hidden) = match answers {
                Some(text) => (parse::<Vec<bool>>("answers", text)?, None),
                None => {
                    let h = hidden_from(hidden.as_deref(), *random, seed, nk.n, nk.k)?;
                    (answer_vector(&h, &queries)?, Some(h))
                }
            };
            let decoded = decode(nk.n, nk.k, &queries, &answers)?;
            let mut out = json!({
                "n": nk.n, "k": nk.k,
                "queries": queries,
                "answers": answers,
                "decoded": decoded,
            });
            if let Some(h) = hidden {
                out["ok"] = json!(h == decoded);
                out["hidden"] = json!(h);
            }
            Ok(out)
        }
    }
}

/// Brute-force `g(n, m)` is used where it finishes in well under a second.
fn g_feasible(n: usize, m: usize) -> bool {
    (n <= 6 && m <= 3) || (n <= 5 && m == 4)
}

fn adaptive(c: &Adaptive, seed: u64) -> Out {
    match c {
        Adaptive::Solve { nk, source } => {
            let h = hidden(source, seed, nk.n, nk.k)?;
            let mut oracle = OracleState::new(h.clone());
            let report = solve_traced(&mut oracle, nk.n, nk.k)?;
            let (bound, kind) = if (1..nk.k).all(|m| g_feasible(nk.n, m)) {
                let g: Vec<u128> = (1..nk.k)
                    .map(|m| g_bruteforce(nk.n, m).map(|w| w.value))
                    .collect::<Result<_, _>>()?;
                (theorem3_bound(nk.n, nk.k, &g)?, "bruteforce_g")
            } else {
                (report.realized_bound() as u128, "realized_covers")
            };
            Ok(json!({
                "hidden": h,
                "found": report.found,
                "ok": report.found == h && (report.queries_used as u128) <= bound,
                "queries_used": report.queries_used,
                "bound": big(bound),
                "bound_kind": kind,
                "cover_counts": report.cover_counts,
                "transcript": oracle.log(),
            }))
        }
        Adaptive::SolveK2 { n, source } => {
            let h = hidden(source, seed, *n, 2)?;
            let mut oracle = OracleState::new(h.clone());
            let found = solve_k2(&mut oracle, *n)?;
            Ok(json!({
                "hidden": h,
                "found": found,
                "ok": found == h && oracle.count() <= 2 * n,
                "queries_used": oracle.count(),
                "bound": 2 * n,
                "transcript": oracle.log(),
            }))
        }
        Adaptive::ExactF {
            nk,
            node_budget,
            symmetry,
        } => {
            let opts = ExactFOptions {
                node_budget: *node_budget,
                symmetry: *symmetry,
            };
            let r = exact_f_with(nk.n, nk.k, &opts)?;
            Ok(json!({
                "n": nk.n, "k": nk.k,
                "f": r.value,
                "antichains": r.antichains,
                "information_bound": r.information_bound,
                "nodes": r.nodes,
            }))
        }
    }
}

fn adversary(c: &Adversary) -> Out {
    match c {
        Adversary::Play { n, k, strategy } => {
            let (adv, found) = match strategy {
                PlayStrategy::Theorem5 => {
                    let mut adv = AdversaryState::theorem5(*n, *k)?;
                    let found = solve_traced(&mut adv, *n, *k)?.found;
                    (adv, found)
                }
                PlayStrategy::K2Counting => {
                    if *k != 2 {
                        return Err(Failure::Input(format!("the counting adversary plays k = 2, got {k}")));
                    }
                    let mut adv = AdversaryState::k2_counting(*n)?;
                    let found = solve_k2(&mut adv, *n)?;
                    (adv, found)
                }
            };
            let lower = adv.lower_bound().unwrap_or(0);
            let charged = adv.candidate_queries() as u64;
            let ok = adv.resolved().as_ref() == Some(&found) && charged >= lower;
            let revealed = adv.revealed().cloned();
            Ok(json!({
                "strategy": strategy_name(*strategy),
                "n": n, "k": k,
                "revealed": revealed,
                "found": found,
                "queries_used": adv.queries_used(),
                "candidate_queries": charged,
                "lower_bound": lower,
                "ok": ok,
            }))
        }
        Adversary::Confusion { nk, family, drop } => {
            let mut f = match family {
                Some(text) => {
                    let f: SetFamily = parse("family", text)?;
                    check_n("family", f.n(), nk.n)?;
                    f
                }
                None => build_family(nk.n, nk.k)?,
            };
            if let Some(text) = drop {
                let elements: Vec<usize> = parse("drop", text)?;
                let m = SubsetMask::from_elements(nk.n, &elements)?;
                if !f.remove(m) {
                    return Err(Failure::Input(format!("--drop {m} is not in the family")));
                }
            }
            let pair = confusion_pair(&f, nk.n, nk.k)?;
            Ok(json!({
                "n": nk.n, "k": nk.k,
                "size": f.len(),
                "identifying": pair.is_none(),
                "pair": pair.map(|(s, t)| vec![s, t]),
            }))
        }
        Adversary::CertificateK2 { n, size } => {
            let c = k2_first_query_certificate(*n, *size)?;
            Ok(json!({
                "n": n, "size": size,
                "count": big(c.count),
                "threshold": big(c.threshold),
                "holds": c.holds(),
            }))
        }
    }
}

fn strategy_name(s: PlayStrategy) -> &'static str {
    match s {
        PlayStrategy::Theorem5 => "THEOREM5_PARTITION",
        PlayStrategy::K2Counting => "K2_COUNTING",
    }
}

fn comb(c: &Comb) -> Out {
    match c {
        Comb::G { n, m } => {
            let brute = g_bruteforce(*n, *m)?;
            let formula = g_formula(*n, *m)?;
            Ok(json!({
                "n": n, "m": m,
                "g_bruteforce": big(brute.value),
                "g_formula": big(formula),
                "equal": brute.value == formula,
                "witness": brute.witness,
                "witness_is_balanced_partition": brute.is_balanced_partition(),
            }))
        }
        Comb::Mc { family } => {
            let f: SetFamily = parse("family", family)?;
            let mc = minimal_covers(&f)?;
            Ok(json!({ "family": f, "size": mc.len(), "minimal_covers": mc }))
        }
        Comb::CountAntichains { n } => {
            let a = antichain_pair_count(*n)?;
            let enumerated = if *n <= ENUMERATION_MAX_N {
                Some(enumerate_antichains(*n, 2)?.count())
            } else {
                None
            };
            Ok(json!({ "n": n, "A": big(a), "enumerated": enumerated }))
        }
        Comb::ExactH(nk) => {
            let h = exact_h_search(nk.n, nk.k)?;
            let formula = h_formula(nk.n, nk.k).ok();
            Ok(json!({ "n": nk.n, "k": nk.k, "h": h, "h_formula": formula }))
        }
    }
}
