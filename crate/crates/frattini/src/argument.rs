//! Both directions of the Frattini argument, plus the coset decomposition
//! and shortest-word machinery the normality certificates are built from.
//!
//! Forward: for `K ◁ G` and any Sylow subgroup `P` of `K`, the product set
//! `K·N_G(P)` covers `G`. Converse: if `K·N_G(P)` covers `G` for *every*
//! Sylow subgroup `P` of `K`, then `K ◁ G`. The two together make the
//! coverage condition equivalent to normality, and [`converse_verdict`]
//! checks that equivalence empirically on any concrete pair.

use std::collections::HashMap;

use thiserror::Error;

use crate::group::Group;
use crate::perm::Permutation;
use crate::subgroup::{is_normal, normalizer, product_set, Subgroup, SubgroupError};
use crate::sylow::{all_sylow_subgroups, sylow_classes, SylowError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FrattiniError {
    #[error("K is not a subgroup of G")]
    NotSubgroup,
    #[error("K is not normal in G, which the forward direction requires")]
    NotNormal,
    #[error("the coverage condition fails for (G, K), so no certificate exists")]
    ConditionFails,
    #[error("element {element} lies outside the subgroup K")]
    OutsideSubgroup { element: String },
    #[error("element {element} lies outside the group G")]
    OutsideGroup { element: String },
    #[error("no decomposition g = a·b with a in N and b in K exists")]
    NoDecomposition,
    #[error("internal verification failed: {detail}")]
    Internal { detail: String },
    #[error(transparent)]
    Subgroup(#[from] SubgroupError),
    #[error(transparent)]
    Sylow(#[from] SylowError),
}

/// One row of a [`FrattiniReport`]: a single Sylow subgroup `P` of `K`
/// together with the data of the coverage test `G = K·N_G(P)`.
pub struct FrattiniEntry {
    pub prime: usize,
    pub sylow: Subgroup,
    pub normalizer_order: usize,
    pub product_size: usize,
    /// True iff the product set covers the whole of `G`.
    pub holds: bool,
}

/// Per-Sylow coverage data for a pair `(G, K)`. `condition_holds` is the
/// conjunction over all entries; an empty report (trivial `K`) is vacuously
/// true.
pub struct FrattiniReport {
    pub entries: Vec<FrattiniEntry>,
    pub condition_holds: bool,
}

/// Which Sylow subgroups a coverage report ranges over.
///
/// `AllConjugates` matches the quantifier "every Sylow subgroup" literally
/// and is the default. `Representatives` checks one subgroup per prime; it
/// is equivalent because `N_G(P^k) = N_G(P)^k` for `k ∈ K` makes coverage
/// constant on each conjugacy class, and the test suite cross-checks the
/// two modes on every pair it sweeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SylowScope {
    AllConjugates,
    Representatives,
}

/// The outcome of checking the coverage condition against actual normality.
///
/// `consistent` must be true for every input pair; an inconsistent pair
/// would be a counterexample to the equivalence and is surfaced loudly by
/// every caller rather than silently accepted.
pub struct Verdict {
    pub condition_holds: bool,
    pub normal: bool,
    pub consistent: bool,
}

/// Coverage report for the hypothesis direction: `K ◁ G` is required, and
/// every entry must hold; a failing entry contradicts the classical lemma
/// and is reported as an internal error, never as a result.
pub fn frattini_forward(g: &Group, k: &Subgroup) -> Result<FrattiniReport, FrattiniError> {
    if !is_normal(g, k).map_err(not_subgroup)? {
        return Err(FrattiniError::NotNormal);
    }
    let report = frattini_condition(g, k)?;
    if !report.condition_holds {
        let bad = report
            .entries
            .iter()
            .find(|e| !e.holds)
            .expect("a failing report has a failing entry");
        return Err(FrattiniError::Internal {
            detail: format!(
                "K is normal but |K·N_G(P)| = {} ≠ {} for the Sylow {}-subgroup {:?}",
                bad.product_size,
                g.order(),
                bad.prime,
                bad.sylow
            ),
        });
    }
    Ok(report)
}

/// Coverage report with no normality assumption: one entry per Sylow
/// subgroup of `K` (all conjugates, all primes dividing `|K|`).
pub fn frattini_condition(g: &Group, k: &Subgroup) -> Result<FrattiniReport, FrattiniError> {
    frattini_condition_scoped(g, k, SylowScope::AllConjugates)
}

pub fn frattini_condition_scoped(
    g: &Group,
    k: &Subgroup,
    scope: SylowScope,
) -> Result<FrattiniReport, FrattiniError> {
    let k = rebase(g, k)?;
    let mut entries = Vec::new();
    for class in sylow_classes(&k)? {
        let subgroups: Vec<&Subgroup> = match scope {
            SylowScope::AllConjugates => class.conjugates.iter().collect(),
            SylowScope::Representatives => vec![&class.representative],
        };
        for sylow in subgroups {
            let n = normalizer(g, sylow)?;
            let product = product_set(&k, &n)?;
            entries.push(FrattiniEntry {
                prime: class.prime,
                sylow: sylow.clone(),
                normalizer_order: n.order(),
                product_size: product.size(),
                holds: product.covers_parent(),
            });
        }
    }
    let condition_holds = entries.iter().all(|e| e.holds);
    Ok(FrattiniReport {
        entries,
        condition_holds,
    })
}

/// Evaluates both sides of the equivalence on `(G, K)`.
pub fn converse_verdict(g: &Group, k: &Subgroup) -> Result<Verdict, FrattiniError> {
    let condition_holds = frattini_condition(g, k)?.condition_holds;
    let normal = is_normal(g, k).map_err(not_subgroup)?;
    Ok(Verdict {
        condition_holds,
        normal,
        consistent: condition_holds == normal,
    })
}

/// Writes `g = a·b` with `a ∈ N` and `b ∈ K`, assuming the product set
/// `N·K` covers `G`. Deterministic: `a` is the canonically smallest element
/// of `N` that works, and `b = a⁻¹·g`.
pub fn decompose_in_product(
    g: &Group,
    k: &Subgroup,
    n: &Subgroup,
    target: &Permutation,
) -> Result<(Permutation, Permutation), FrattiniError> {
    if target.degree() != g.degree() || !g.contains(target) {
        return Err(FrattiniError::OutsideGroup {
            element: target.to_string(),
        });
    }
    for a in n.elements() {
        let b = a.inverse().compose(target);
        if k.contains(&b) {
            return Ok((a.clone(), b));
        }
    }
    Err(FrattiniError::NoDecomposition)
}

/// One letter of a Sylow word: an element of `K` together with the index of
/// the Sylow subgroup it is drawn from, in the flat ordering of
/// [`all_sylow_subgroups`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordLetter {
    pub element: Permutation,
    pub sylow_index: usize,
}

/// A shortest product of Sylow elements equal to `x`, as a word over the
/// alphabet of all non-identity elements of all Sylow subgroups of `K`.
///
/// Breadth-first search from the identity with the alphabet in canonical
/// order (ascending `sylow_index`, then canonical element order) yields the
/// lexicographically smallest shortest word, so output is deterministic.
/// The identity maps to the empty word.
pub fn sylow_word(k: &Subgroup, x: &Permutation) -> Result<Vec<WordLetter>, FrattiniError> {
    if x.degree() != k.degree() || !k.contains(x) {
        return Err(FrattiniError::OutsideSubgroup {
            element: x.to_string(),
        });
    }
    if x.is_identity() {
        return Ok(Vec::new());
    }
    let flat = all_sylow_subgroups(k)?;
    let mut alphabet: Vec<WordLetter> = Vec::new();
    for (sylow_index, sub) in flat.iter().enumerate() {
        for element in sub.elements() {
            if !element.is_identity() {
                alphabet.push(WordLetter {
                    element: element.clone(),
                    sylow_index,
                });
            }
        }
    }

    let index_of: HashMap<&Permutation, usize> =
        k.elements().iter().enumerate().map(|(i, e)| (e, i)).collect();
    let target = index_of[x];
    let start = index_of[&k.parent().identity()];
    let mut back: Vec<Option<(usize, usize)>> = vec![None; k.order()];
    let mut queue = std::collections::VecDeque::from([start]);
    let mut reached = false;
    'bfs: while let Some(state) = queue.pop_front() {
        for (letter_index, letter) in alphabet.iter().enumerate() {
            let next = k.elements()[state].compose(&letter.element);
            let next = index_of[&next];
            if next != start && back[next].is_none() {
                back[next] = Some((state, letter_index));
                if next == target {
                    reached = true;
                    break 'bfs;
                }
                queue.push_back(next);
            }
        }
    }
    if !reached {
        // The Sylow subgroups of K generate K, so every element is reachable.
        return Err(FrattiniError::Internal {
            detail: format!("no Sylow word found for {x} although x ∈ K"),
        });
    }

    let mut word = Vec::new();
    let mut state = target;
    while state != start {
        let (prev, letter_index) = back[state].expect("backtracking stays on discovered states");
        word.push(alphabet[letter_index].clone());
        state = prev;
    }
    word.reverse();
    Ok(word)
}

/// Folds a word back into the group element it spells, left to right.
pub fn word_product(degree: usize, word: &[WordLetter]) -> Permutation {
    word.iter()
        .fold(Permutation::identity(degree), |acc, l| acc.compose(&l.element))
}

/// Re-roots `k` at `g`, mapping containment failures to the public error.
fn rebase(g: &Group, k: &Subgroup) -> Result<Subgroup, FrattiniError> {
    k.in_group(g).map_err(not_subgroup)
}

fn not_subgroup(_: SubgroupError) -> FrattiniError {
    FrattiniError::NotSubgroup
}
