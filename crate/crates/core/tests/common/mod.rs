//! Invariants shared by the property tests and the acceptance harness.
//!
//! Each check drives a deterministic proptest runner for `cases` cases, or
//! runs once when the invariant is a finite statement.

#![allow(dead_code)]

use std::sync::OnceLock;

use antichain_core::adaptive::{exact_f_with, gainanov_find_one, solve_k2, solve_traced, theorem3_bound, ExactFOptions};
use antichain_core::adversary::{confusion_pair, missing_set_construction, AdversaryState};
use antichain_core::combinatorics::{antichain_pair_count, eq1_bound, exact_h_search, g_bruteforce, g_formula};
use antichain_core::nonadaptive::{answer_vector, build_family, decode, h_formula, large_regime_max_k, regime, verify_identifying};
use antichain_core::oracle::consistent_antichains;
use antichain_core::set::{enumerate_antichains, is_cover, minimal_covers};
use antichain_core::{answer_query, Antichain, OracleState, QueryOracle, SetFamily, SubsetMask, Transcript};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRng, TestRunner};

pub struct Invariant {
    pub module: &'static str,
    pub name: &'static str,
    /// False for finite statements checked once.
    pub sampled: bool,
    pub check: fn(u32) -> Result<(), String>,
}

pub fn runner(cases: u32) -> TestRunner {
    let config = Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    };
    let rng = TestRng::deterministic_rng(config.rng_algorithm);
    TestRunner::new_with_rng(config, rng)
}

fn run<S: Strategy>(
    cases: u32,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    runner(cases).run(&strategy, test).map_err(|e| e.to_string())
}

fn ok(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// `(n, masks)` with `n` in `lo..=hi` and up to `m` raw masks.
pub fn masks(lo: usize, hi: usize, m: usize) -> impl Strategy<Value = (usize, Vec<u32>)> {
    (lo..=hi).prop_flat_map(move |n| (Just(n), prop::collection::vec(0u32..(1u32 << n), 1..=m)))
}

pub fn family(n: usize, mut masks: Vec<u32>) -> SetFamily {
    masks.sort_unstable();
    masks.dedup();
    SetFamily::from_masks(n, masks).unwrap()
}

pub fn antichain(n: usize, masks: Vec<u32>) -> Antichain {
    Antichain::new(family(n, masks).minimal_members()).unwrap()
}

fn mask(n: usize, bits: u32) -> SubsetMask {
    SubsetMask::new(n, bits).unwrap()
}

/// Brute-force `g(n, m)` for `n <= 6`, `m <= 3`.
pub fn g_table() -> &'static Vec<Vec<u128>> {
    static TABLE: OnceLock<Vec<Vec<u128>>> = OnceLock::new();
    TABLE.get_or_init(|| {
        (0..=6usize)
            .map(|n| {
                (1..=3usize)
                    .map(|m| g_bruteforce(n, m).map_or(0, |w| w.value))
                    .collect()
            })
            .collect()
    })
}

pub fn invariants() -> Vec<Invariant> {
    vec![
        // set_core
        Invariant {
            module: "set_core",
            name: "minimal_members is an antichain of members with no smaller member",
            sampled: true,
            check: |cases| {
                run(cases, masks(1, 8, 8), |(n, m)| {
                    let f = family(n, m);
                    let min = f.minimal_members();
                    prop_assert!(min.is_antichain());
                    for x in f.iter() {
                        let has_smaller = f.iter().any(|y| y != x && y.is_subset(*x).unwrap());
                        prop_assert_eq!(min.contains(*x), !has_smaller);
                    }
                    Ok(())
                })
            },
        },
        Invariant {
            module: "set_core",
            name: "minimal_covers are antichains of covers whose one-element removals fail",
            sampled: true,
            check: |cases| {
                run(cases, masks(1, 8, 4), |(n, m)| {
                    let f = family(n, m);
                    let mc = minimal_covers(&f).unwrap();
                    prop_assert!(mc.is_antichain());
                    if f.iter().any(|x| x.is_empty()) {
                        prop_assert!(mc.is_empty());
                        return Ok(());
                    }
                    for c in mc.iter() {
                        prop_assert!(is_cover(*c, &f).unwrap());
                        for x in c.elements() {
                            prop_assert!(!is_cover(c.without(x).unwrap(), &f).unwrap());
                        }
                    }
                    // Every cover contains a returned one.
                    for bits in 0..1u32 << n {
                        let a = mask(n, bits);
                        if is_cover(a, &f).unwrap() {
                            prop_assert!(mc.iter().any(|c| c.is_subset(a).unwrap()));
                        }
                    }
                    Ok(())
                })
            },
        },
        Invariant {
            module: "set_core",
            name: "disjoint families have prod |F_i| minimal covers",
            sampled: true,
            check: |cases| {
                run(cases, (2usize..=12, prop::collection::vec(0usize..5, 12)), |(n, labels)| {
                    // Element i goes to part labels[i]; label 4 leaves it out.
                    let mut parts = [0u32; 4];
                    for (i, &l) in labels.iter().take(n).enumerate() {
                        if l < 4 {
                            parts[l] |= 1 << i;
                        }
                    }
                    let parts: Vec<u32> = parts.into_iter().filter(|&p| p != 0).collect();
                    prop_assume!(!parts.is_empty());
                    let f = family(n, parts.clone());
                    let want: usize = parts.iter().map(|p| p.count_ones() as usize).product();
                    prop_assert_eq!(minimal_covers(&f).unwrap().len(), want);
                    Ok(())
                })
            },
        },
        Invariant {
            module: "set_core",
            name: "complement_family is a size-preserving involution",
            sampled: true,
            check: |cases| {
                run(cases, masks(1, 20, 10), |(n, m)| {
                    let f = family(n, m);
                    let c = f.complement_family();
                    prop_assert_eq!(c.len(), f.len());
                    prop_assert_eq!(c.complement_family(), f);
                    Ok(())
                })
            },
        },
        Invariant {
            module: "set_core",
            name: "2-antichain enumeration count equals A(n) for 2 <= n <= 6",
            sampled: false,
            check: |_| {
                for n in 2..=6 {
                    let got = enumerate_antichains(n, 2).unwrap().count() as u128;
                    let want = antichain_pair_count(n).unwrap();
                    ok(got == want, || format!("n={n}: {got} != {want}"))?;
                }
                Ok(())
            },
        },
        // oracle
        Invariant {
            module: "oracle",
            name: "answers are monotone in the query",
            sampled: true,
            check: |cases| {
                run(cases, (masks(1, 12, 5), any::<u32>(), any::<u32>()), |((n, m), q, extra)| {
                    let s = antichain(n, m);
                    let full = (1u32 << n) - 1;
                    let q = q & full;
                    let q2 = q | (extra & full);
                    if answer_query(&s, mask(n, q)).unwrap() {
                        prop_assert!(answer_query(&s, mask(n, q2)).unwrap());
                    }
                    Ok(())
                })
            },
        },
        Invariant {
            module: "oracle",
            name: "consistent_antichains keeps the hidden one and shrinks as answers arrive",
            sampled: true,
            check: |cases| {
                run(
                    cases,
                    (masks(1, 4, 4), prop::collection::vec(any::<u32>(), 0..6)),
                    |((n, m), qs)| {
                        let s = antichain(n, m);
                        let mut o = OracleState::new(s.clone());
                        let mut prev = consistent_antichains(o.log(), s.len()).unwrap();
                        for q in qs {
                            o.ask(mask(n, q & ((1u32 << n) - 1))).unwrap();
                            let now = consistent_antichains(o.log(), s.len()).unwrap();
                            prop_assert!(now.contains(&s));
                            prop_assert!(now.iter().all(|a| prev.contains(a)));
                            prev = now;
                        }
                        Ok(())
                    },
                )
            },
        },
        // nonadaptive
        Invariant {
            module: "nonadaptive",
            name: "built families identify, n <= 6",
            sampled: false,
            check: |_| {
                for n in 1..=6usize {
                    for k in 1..=large_regime_max_k(n.max(3)) as usize {
                        if regime(n, k).is_err() {
                            continue;
                        }
                        let f = build_family(n, k).unwrap();
                        ok(verify_identifying(&f, n, k).unwrap(), || format!("({n},{k}) not identifying"))?;
                    }
                }
                Ok(())
            },
        },
        Invariant {
            module: "nonadaptive",
            name: "decode(build_family) recovers the hidden antichain, n <= 6",
            sampled: true,
            check: |cases| {
                run(cases, masks(1, 6, 8), |(n, m)| {
                    let s = antichain(n, m);
                    prop_assume!(regime(n, s.len()).is_ok());
                    let q = build_family(n, s.len()).unwrap();
                    let a = answer_vector(&s, &q).unwrap();
                    prop_assert_eq!(decode(n, s.len(), &q, &a).unwrap(), s);
                    Ok(())
                })
            },
        },
        Invariant {
            module: "nonadaptive",
            name: "|build_family| = h_formula on every supported (n, k), n <= 10",
            sampled: false,
            check: |_| {
                for n in 1..=10usize {
                    for k in 1..=large_regime_max_k(n.max(3)) as usize {
                        if let Ok(h) = h_formula(n, k) {
                            let got = build_family(n, k).unwrap().len() as u64;
                            ok(got == h, || format!("({n},{k}): {got} != {h}"))?;
                        }
                    }
                }
                Ok(())
            },
        },
        // adaptive
        Invariant {
            module: "adaptive",
            name: "element removal returns a minimal YES set using exactly |a| queries",
            sampled: true,
            check: |cases| {
                run(cases, (masks(1, 12, 5), any::<u32>()), |((n, m), q)| {
                    let s = antichain(n, m);
                    let full = (1u32 << n) - 1;
                    let a = if answer_query(&s, mask(n, q & full)).unwrap() { q & full } else { full };
                    let a = mask(n, a);
                    let mut o = OracleState::new(s.clone());
                    let h = gainanov_find_one(&mut o, a).unwrap();
                    prop_assert_eq!(o.count(), a.len());
                    prop_assert!(h.is_subset(a).unwrap());
                    prop_assert!(s.contains(h));
                    prop_assert!(answer_query(&s, h).unwrap());
                    for x in h.elements() {
                        prop_assert!(!answer_query(&s, h.without(x).unwrap()).unwrap());
                    }
                    Ok(())
                })
            },
        },
        Invariant {
            module: "adaptive",
            name: "solve recovers the hidden antichain within the realized cover budget, n <= 12, k <= 4",
            sampled: true,
            check: |cases| {
                run(cases, masks(1, 12, 4), |(n, m)| {
                    let s = antichain(n, m);
                    let mut o = OracleState::new(s.clone());
                    let r = solve_traced(&mut o, n, s.len()).unwrap();
                    prop_assert_eq!(&r.found, &s);
                    prop_assert!(r.queries_used <= r.realized_bound());
                    Ok(())
                })
            },
        },
        Invariant {
            module: "adaptive",
            name: "solve stays within sum g(n,m) + kn with brute-force g, n <= 6",
            sampled: true,
            check: |cases| {
                let table = g_table();
                run(cases, masks(1, 6, 4), |(n, m)| {
                    let s = antichain(n, m);
                    let k = s.len();
                    let g: Vec<u128> = (1..k).map(|m| table[n][m - 1]).collect();
                    let bound = theorem3_bound(n, k, &g).unwrap();
                    let mut o = OracleState::new(s.clone());
                    prop_assert_eq!(solve_traced(&mut o, n, k).unwrap().found, s);
                    prop_assert!(o.count() as u128 <= bound, "{} > {}", o.count(), bound);
                    Ok(())
                })
            },
        },
        Invariant {
            module: "adaptive",
            name: "solve_k2 uses at most 2n queries, n <= 16",
            sampled: true,
            check: |cases| {
                let gen = (2usize..=16).prop_flat_map(|n| (Just(n), 0..n, 1..n, any::<u32>(), any::<u32>()));
                run(cases, gen, |(n, i, shift, a, b)| {
                    // i is in a only, j in b only, so the pair is incomparable.
                    let j = (i + shift) % n;
                    let full = (1u32 << n) - 1;
                    let a = (a | 1 << i) & !(1 << j) & full;
                    let b = (b | 1 << j) & !(1 << i) & full;
                    let s = antichain(n, vec![a, b]);
                    let mut o = OracleState::new(s.clone());
                    prop_assert_eq!(solve_k2(&mut o, n).unwrap(), s);
                    prop_assert!(o.count() <= 2 * n);
                    Ok(())
                })
            },
        },
        Invariant {
            module: "adaptive",
            name: "exact_f is at least the information bound",
            sampled: false,
            check: |_| {
                for (n, k) in [(1, 1), (2, 1), (2, 2), (3, 1), (3, 2), (3, 3), (4, 1)] {
                    let r = exact_f_with(n, k, &ExactFOptions::default()).unwrap();
                    ok(r.value >= r.information_bound, || format!("({n},{k}): {} < {}", r.value, r.information_bound))?;
                }
                Ok(())
            },
        },
        // adversary
        Invariant {
            module: "adversary",
            name: "partition adversary keeps every live completion consistent",
            sampled: true,
            check: |cases| {
                let nk = (3usize..=8).prop_flat_map(|k| (k + 1..=9).prop_map(move |n| (n, k)));
                run(cases, (nk, prop::collection::vec(any::<u32>(), 1..40)), |((n, k), qs)| {
                    let mut adv = AdversaryState::theorem5(n, k).unwrap();
                    for q in qs {
                        adv.ask(mask(n, q & ((1u32 << n) - 1))).unwrap();
                        let live = adv.live_completions();
                        prop_assert!(!live.is_empty());
                        for c in &live {
                            prop_assert!(adv.transcript().is_consistent_with(c).unwrap());
                        }
                    }
                    Ok(())
                })
            },
        },
        Invariant {
            module: "adversary",
            name: "missing-set pairs agree on every query but a0 (and its partner)",
            sampled: true,
            check: |cases| {
                run(cases, (3usize..=7, 2usize..=16, any::<u32>()), |(n, k, a0)| {
                    let a0 = mask(n, a0 & ((1u32 << n) - 1));
                    let Ok((s, t)) = missing_set_construction(n, k, a0) else {
                        return Ok(());
                    };
                    prop_assert_eq!(s.len(), k);
                    prop_assert_eq!(t.len(), k);
                    prop_assert!(s != t);
                    for bits in 0..1u32 << n {
                        let q = mask(n, bits);
                        if q.len() != a0.len() {
                            prop_assert_eq!(answer_query(&s, q).unwrap(), answer_query(&t, q).unwrap());
                        }
                    }
                    let d: Vec<SubsetMask> = (0..1u32 << n)
                        .map(|b| mask(n, b))
                        .filter(|&q| answer_query(&s, q).unwrap() != answer_query(&t, q).unwrap())
                        .collect();
                    prop_assert!(d.contains(&a0));
                    prop_assert!(d.len() <= 2);
                    Ok(())
                })
            },
        },
        Invariant {
            module: "adversary",
            name: "missing-set pairs, exhaustive over n <= 5, every k and a0",
            sampled: false,
            check: |_| {
                for n in 3..=5usize {
                    for k in 2..=large_regime_max_k(n) as usize {
                        for a in 0..1u32 << n {
                            let a0 = mask(n, a);
                            let Ok((s, t)) = missing_set_construction(n, k, a0) else {
                                continue;
                            };
                            let d: Vec<u32> = (0..1u32 << n)
                                .filter(|&b| answer_query(&s, mask(n, b)).unwrap() != answer_query(&t, mask(n, b)).unwrap())
                                .collect();
                            let partner_ok = d.iter().all(|&b| b == a || b.count_ones() == a.count_ones());
                            ok(d.contains(&a) && d.len() <= 2 && partner_ok, || {
                                format!("(n, k, a0) = ({n}, {k}, {a0}): differ on {d:?}")
                            })?;
                        }
                    }
                }
                Ok(())
            },
        },
        Invariant {
            module: "adversary",
            name: "confusion_pair is empty exactly when verify_identifying holds, n <= 5",
            sampled: true,
            check: |cases| {
                let fam = (1usize..=5).prop_flat_map(|n| {
                    (Just(n), 1usize..=3, prop::collection::vec(0u32..(1u32 << n), 0..=(1usize << n)))
                });
                run(cases, fam, |(n, k, m)| {
                    let f = if m.is_empty() { SetFamily::empty(n).unwrap() } else { family(n, m) };
                    let pair = confusion_pair(&f, n, k).unwrap();
                    prop_assert_eq!(pair.is_none(), verify_identifying(&f, n, k).unwrap());
                    if let Some((s, t)) = pair {
                        prop_assert!(s != t);
                        prop_assert_eq!(answer_vector(&s, &f).unwrap(), answer_vector(&t, &f).unwrap());
                    }
                    Ok(())
                })
            },
        },
        // combinatorics
        Invariant {
            module: "combinatorics",
            name: "g_bruteforce >= g_formula",
            sampled: false,
            check: |_| {
                for (n, m) in [(2, 1), (2, 2), (3, 2), (3, 3), (4, 2), (4, 3), (5, 2), (5, 3), (6, 2), (6, 3), (4, 4), (5, 4)] {
                    let b = g_bruteforce(n, m).unwrap().value;
                    let f = g_formula(n, m).unwrap();
                    ok(b >= f, || format!("g({n},{m}): {b} < {f}"))?;
                }
                Ok(())
            },
        },
        Invariant {
            module: "combinatorics",
            name: "the shared-element bound dominates |MC(F)| for m <= 3, or when every member has a private element",
            sampled: true,
            check: |cases| {
                run(cases, masks(1, 8, 6), |(n, m)| {
                    let f = family(n, m);
                    let (mut seen, mut shared) = (0u32, 0u32);
                    for x in f.iter() {
                        shared |= seen & x.bits();
                        seen |= x.bits();
                    }
                    let private = f.iter().all(|x| x.bits() & !shared != 0);
                    if f.len() > 3 && !private {
                        return Ok(());
                    }
                    if let Ok(bound) = eq1_bound(&f) {
                        prop_assert!(minimal_covers(&f).unwrap().len() as u128 <= bound);
                    }
                    Ok(())
                })
            },
        },
        Invariant {
            module: "combinatorics",
            name: "A(n) matches enumeration for 2 <= n <= 6",
            sampled: false,
            check: |_| {
                for n in 2..=6 {
                    let e = enumerate_antichains(n, 2).unwrap().count() as u128;
                    ok(e == antichain_pair_count(n).unwrap(), || format!("A({n})"))?;
                }
                Ok(())
            },
        },
        Invariant {
            module: "combinatorics",
            name: "exact_h_search = h_formula at (3,1), (3,2), (4,2), (4,3)",
            sampled: false,
            check: |_| {
                for (n, k) in [(3, 1), (3, 2), (4, 2), (4, 3)] {
                    let e = exact_h_search(n, k).unwrap() as u64;
                    let h = h_formula(n, k).unwrap();
                    ok(e == h, || format!("h({n},{k}): search {e}, formula {h}"))?;
                }
                Ok(())
            },
        },
        // transcripts
        Invariant {
            module: "oracle",
            name: "transcript JSON round-trips",
            sampled: true,
            check: |cases| {
                run(cases, (masks(1, 20, 4), prop::collection::vec(any::<u32>(), 0..10)), |((n, m), qs)| {
                    let s = antichain(n, m);
                    let mut o = OracleState::new(s.clone());
                    for q in qs {
                        o.ask(mask(n, q & ((1u32 << n) - 1))).unwrap();
                    }
                    let text = serde_json::to_string(o.log()).unwrap();
                    let back: Transcript = serde_json::from_str(&text).unwrap();
                    prop_assert_eq!(serde_json::to_string(&back).unwrap(), text);
                    let fam = serde_json::to_string(&s).unwrap();
                    let s2: Antichain = serde_json::from_str(&fam).unwrap();
                    prop_assert_eq!(s2, s);
                    Ok(())
                })
            },
        },
    ]
}
