//! Permutations of the points `1..=n`, with cycle-notation parsing and printing.
//!
//! Products read left to right everywhere in this crate: `p.compose(&q)` is
//! the permutation that applies `p` first and `q` second. Points are 1-based
//! in all text forms and 0-based in the internal image table.

use std::fmt;

use thiserror::Error;

/// Errors from constructing or parsing a [`Permutation`].
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("degree must be at least 1")]
    ZeroDegree,
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("point {point} appears more than once")]
    RepeatedPoint { point: usize },
    #[error("malformed cycle notation: {0}")]
    Malformed(String),
    #[error("image table is not a bijection of 0..{0}")]
    NotBijective(usize),
}

/// A permutation of the points `1..=n`.
///
/// Stored as a 0-based image table: `images[i]` is the image of point `i`.
/// Equality and ordering are lexicographic on the image table, which is the
/// canonical order used for element tables throughout the crate.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    /// The identity on `degree` points.
    pub fn identity(degree: usize) -> Permutation {
        assert!(degree >= 1, "degree must be at least 1");
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from a 0-based image table, validating that it
    /// is a bijection.
    pub fn from_images(images: Vec<u32>) -> Result<Permutation, PermError> {
        if images.is_empty() {
            return Err(PermError::ZeroDegree);
        }
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            let img = img as usize;
            if img >= n {
                return Err(PermError::PointOutOfRange {
                    point: img + 1,
                    degree: n,
                });
            }
            if seen[img] {
                return Err(PermError::NotBijective(n));
            }
            seen[img] = true;
        }
        Ok(Permutation { images })
    }

    /// Parses a whitespace-tolerant product of disjoint cycles over the
    /// points `1..=degree`. `()` denotes the identity.
    ///
    /// Each point may appear in at most one cycle; out-of-range or repeated
    /// points and unbalanced parentheses are rejected.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation, PermError> {
        if degree == 0 {
            return Err(PermError::ZeroDegree);
        }
        let cycles = scan_cycles(text)?;
        let mut used = vec![false; degree];
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for cycle in &cycles {
            for &point in cycle {
                if point == 0 || point > degree {
                    return Err(PermError::PointOutOfRange { point, degree });
                }
                if used[point - 1] {
                    return Err(PermError::RepeatedPoint { point });
                }
                used[point - 1] = true;
            }
            for (i, &point) in cycle.iter().enumerate() {
                let next = cycle[(i + 1) % cycle.len()];
                images[point - 1] = (next - 1) as u32;
            }
        }
        Ok(Permutation { images })
    }

    /// Number of points acted on.
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 0-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    /// The raw 0-based image table.
    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// Left-to-right product: the result maps `t` to `other(self(t))`.
    ///
    /// Panics if the degrees differ; mixing degrees is a caller bug.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(
            self.degree(),
            other.degree(),
            "degree mismatch in composition"
        );
        let images = self.images.iter().map(|&i| other.images[i as usize]).collect();
        Permutation { images }
    }

    /// The inverse permutation.
    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u32;
        }
        Permutation { images }
    }

    /// The conjugate `g⁻¹ · self · g`, i.e. `self` with its cycles relabeled
    /// through `g`.
    ///
    /// Panics if the degrees differ.
    pub fn conjugate(&self, g: &Permutation) -> Permutation {
        assert_eq!(
            self.degree(),
            g.degree(),
            "degree mismatch in conjugation"
        );
        // result(g(t)) = g(self(t)) for every t, which avoids materializing g⁻¹.
        let mut images = vec![0u32; self.degree()];
        for (t, &xt) in self.images.iter().enumerate() {
            images[g.images[t] as usize] = g.images[xt as usize];
        }
        Permutation { images }
    }

    /// `self` composed with itself `e` times; `pow(0)` is the identity.
    pub fn pow(&self, mut e: usize) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }

    /// Least `k ≥ 1` with `self^k` the identity: the lcm of the cycle lengths.
    pub fn order(&self) -> usize {
        let mut ord: u128 = 1;
        for cycle in self.cycles() {
            ord = num_integer::lcm(ord, cycle.len() as u128);
        }
        usize::try_from(ord).expect("element order overflows usize")
    }

    /// Nontrivial cycles as 0-based point lists, each starting at its
    /// smallest point, ordered by that smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] || self.apply(start) == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut t = self.apply(start);
            while t != start {
                seen[t] = true;
                cycle.push(t);
                t = self.apply(t);
            }
            cycles.push(cycle);
        }
        cycles
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (i, point) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", point + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Tokenizes `text` into 1-based cycles, validating parenthesis structure
/// only. `()` yields an empty cycle, which contributes nothing.
fn scan_cycles(text: &str) -> Result<Vec<Vec<usize>>, PermError> {
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut current: Option<Vec<usize>> = None;
    let mut chars = text.chars().peekable();
    while let Some(c) = chars.next() {
        match c {
            c if c.is_whitespace() => {}
            '(' => {
                if current.is_some() {
                    return Err(PermError::Malformed("nested '('".into()));
                }
                current = Some(Vec::new());
            }
            ')' => match current.take() {
                Some(cycle) => {
                    if !cycle.is_empty() {
                        cycles.push(cycle);
                    }
                }
                None => return Err(PermError::Malformed("')' without matching '('".into())),
            },
            c if c.is_ascii_digit() => {
                let cycle = current
                    .as_mut()
                    .ok_or_else(|| PermError::Malformed("point outside parentheses".into()))?;
                let mut value = digit(c);
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        value = value
                            .checked_mul(10)
                            .and_then(|v| v.checked_add(digit(d)))
                            .ok_or_else(|| PermError::Malformed("point too large".into()))?;
                        chars.next();
                    } else {
                        break;
                    }
                }
                cycle.push(value);
            }
            other => {
                return Err(PermError::Malformed(format!("unexpected character {other:?}")));
            }
        }
    }
    if current.is_some() {
        return Err(PermError::Malformed("unclosed '('".into()));
    }
    if cycles.is_empty() && !text.contains('(') {
        return Err(PermError::Malformed("empty input".into()));
    }
    Ok(cycles)
}

fn digit(c: char) -> usize {
    c as usize - '0' as usize
}
