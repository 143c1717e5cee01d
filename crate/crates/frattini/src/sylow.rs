//! Sylow p-subgroups of a subgroup `K` and their full conjugation orbits.
//!
//! Construction is deterministic: the seed p-element and every climbing
//! element are the canonically smallest candidates, so repeated runs (and
//! independent checkers) agree on representatives, conjugate ordering and
//! indices.

use std::collections::{BTreeSet, VecDeque};

use thiserror::Error;

use crate::perm::Permutation;
use crate::subgroup::{conjugate_subgroup, Subgroup, SubgroupError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SylowError {
    #[error("{p} is not a prime")]
    NotPrime { p: usize },
    #[error("{n} is not a positive integer")]
    NotPositive { n: usize },
    #[error("prime {p} does not divide the subgroup order {order}")]
    DoesNotDivide { p: usize, order: usize },
    #[error("normalizer climb stalled at order {reached} short of {target}; this is an engine bug")]
    ClimbStalled { reached: usize, target: usize },
    #[error(transparent)]
    Subgroup(#[from] SubgroupError),
}

/// All Sylow data of one prime inside a subgroup `K`.
pub struct SylowClass {
    pub prime: usize,
    /// `prime^exponent` is the p-part of `|K|`.
    pub exponent: u32,
    /// The deterministic representative, of order `prime^exponent`.
    pub representative: Subgroup,
    /// The full K-conjugation orbit of the representative, in canonical
    /// order. By Sylow's theorem this is every Sylow p-subgroup of `K`.
    pub conjugates: Vec<Subgroup>,
}

impl SylowClass {
    /// `n_p`, the number of Sylow p-subgroups.
    pub fn count(&self) -> usize {
        self.conjugates.len()
    }
}

pub fn is_prime(p: usize) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The largest power of the prime `p` dividing `n`.
pub fn p_part(n: usize, p: usize) -> Result<usize, SylowError> {
    if !is_prime(p) {
        return Err(SylowError::NotPrime { p });
    }
    if n == 0 {
        return Err(SylowError::NotPositive { n });
    }
    let mut part = 1;
    let mut rest = n;
    while rest.is_multiple_of(p) {
        part *= p;
        rest /= p;
    }
    Ok(part)
}

/// Prime factorization of `n ≥ 1` as (prime, exponent) pairs, primes ascending.
fn prime_factorization(mut n: usize) -> Vec<(usize, u32)> {
    let mut factors = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        factors.push((n, 1));
    }
    factors
}

/// A Sylow p-subgroup of `K`, i.e. a subgroup of order `p_part(|K|, p)`.
///
/// Seeds with the canonically smallest element whose order is divisible by
/// `p`, powered to pure p-power order. Then climbs: as long as `P` falls
/// short, the normalizer `N_K(P)` strictly contains `P` and carries a
/// p-element `y ∉ P` with `y^p ∈ P`; adjoining it multiplies `|P|` by `p`.
/// Progress is asserted at runtime.
pub fn sylow_subgroup(k: &Subgroup, p: usize) -> Result<Subgroup, SylowError> {
    if !is_prime(p) {
        return Err(SylowError::NotPrime { p });
    }
    if !k.order().is_multiple_of(p) {
        return Err(SylowError::DoesNotDivide { p, order: k.order() });
    }
    let target = p_part(k.order(), p)?;

    let seed = k
        .elements()
        .iter()
        .find(|x| x.order() % p == 0)
        .expect("p divides |K|, so K has an element of order divisible by p (Cauchy)");
    let seed = pure_p_power(seed, p);
    let mut current = Subgroup::generated(k.parent(), &[seed])?;

    while current.order() < target {
        let climber = find_climber(k, &current, p).ok_or(SylowError::ClimbStalled {
            reached: current.order(),
            target,
        })?;
        let mut gens = current.generators().to_vec();
        gens.push(climber);
        let grown = Subgroup::generated(k.parent(), &gens)?;
        if grown.order() <= current.order() {
            return Err(SylowError::ClimbStalled {
                reached: current.order(),
                target,
            });
        }
        current = grown;
    }
    Ok(current)
}

/// Strips the non-p part of `x`'s order, leaving an element of p-power order.
fn pure_p_power(x: &Permutation, p: usize) -> Permutation {
    let ord = x.order();
    let mut ppart = 1;
    let mut rest = ord;
    while rest.is_multiple_of(p) {
        ppart *= p;
        rest /= p;
    }
    x.pow(ord / ppart)
}

/// Canonically smallest p-element of `N_K(P) \ P`, powered so that it lies
/// outside `P` while its p-th power lies inside.
fn find_climber(k: &Subgroup, p_sub: &Subgroup, p: usize) -> Option<Permutation> {
    let normalizing = |cand: &Permutation| {
        p_sub
            .generators()
            .iter()
            .all(|x| p_sub.contains(&x.conjugate(cand)))
    };
    for y in k.elements() {
        if p_sub.contains(y) || !normalizing(y) {
            continue;
        }
        let y = pure_p_power(y, p);
        if y.is_identity() || p_sub.contains(&y) {
            continue;
        }
        // Largest power of the form y^(p^j) still outside P; its p-th power
        // then lands inside.
        let mut z = y;
        loop {
            let zp = z.pow(p);
            if p_sub.contains(&zp) {
                return Some(z);
            }
            z = zp;
        }
    }
    None
}

/// Every Sylow p-subgroup of `K`: the conjugation orbit of the
/// deterministic representative under elements of `K`, in canonical order.
pub fn all_sylow(k: &Subgroup, p: usize) -> Result<Vec<Subgroup>, SylowError> {
    let rep = sylow_subgroup(k, p)?;
    Ok(conjugation_orbit(k, rep)?)
}

fn conjugation_orbit(k: &Subgroup, start: Subgroup) -> Result<Vec<Subgroup>, SubgroupError> {
    let mut seen: BTreeSet<Vec<Permutation>> = BTreeSet::new();
    seen.insert(start.elements().to_vec());
    let mut orbit = vec![start.clone()];
    let mut queue = VecDeque::from([start]);
    while let Some(current) = queue.pop_front() {
        for g in k.elements() {
            let moved = conjugate_subgroup(&current, g)?;
            if seen.insert(moved.elements().to_vec()) {
                orbit.push(moved.clone());
                queue.push_back(moved);
            }
        }
    }
    orbit.sort_by(|a, b| a.elements().cmp(b.elements()));
    Ok(orbit)
}

/// One [`SylowClass`] per prime dividing `|K|`, primes ascending. Empty for
/// the trivial subgroup.
pub fn sylow_classes(k: &Subgroup) -> Result<Vec<SylowClass>, SylowError> {
    let mut classes = Vec::new();
    for (prime, exponent) in prime_factorization(k.order()) {
        let representative = sylow_subgroup(k, prime)?;
        let conjugates = conjugation_orbit(k, representative.clone())?;
        classes.push(SylowClass {
            prime,
            exponent,
            representative,
            conjugates,
        });
    }
    Ok(classes)
}

/// All Sylow subgroups of `K` across all primes, flattened into one list:
/// classes in ascending prime order, conjugates in canonical order within
/// each class. Indices into this list are the stable `sylow_index` used by
/// words and certificates.
pub fn all_sylow_subgroups(k: &Subgroup) -> Result<Vec<Subgroup>, SylowError> {
    Ok(sylow_classes(k)?
        .into_iter()
        .flat_map(|class| class.conjugates)
        .collect())
}
