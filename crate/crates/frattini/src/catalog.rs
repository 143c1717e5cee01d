//! Standard group constructors and the on-disk group-file format.
//!
//! Group files are line-oriented: the first meaningful line is `degree n`,
//! every later nonblank line is one generator in cycle notation, and `#`
//! starts a comment.

use std::fs;
use std::path::Path;

use thiserror::Error;

use crate::group::{Group, GroupError};
use crate::perm::{PermError, Permutation};

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("unsupported parameter: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("could not read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: {source}")]
    BadPermutation {
        line: usize,
        #[source]
        source: PermError,
    },
}

/// The symmetric group S_n on `n` points, order `n!`.
pub fn make_symmetric(n: usize) -> Result<Group, CatalogError> {
    if n == 0 {
        return Err(CatalogError::Unsupported("S_0 has no points".into()));
    }
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(transposition(n));
        if n >= 3 {
            gens.push(full_cycle(n));
        }
    }
    Ok(Group::build(n, gens)?)
}

/// The alternating group A_n, order `n!/2` for `n ≥ 2`.
pub fn make_alternating(n: usize) -> Result<Group, CatalogError> {
    if n == 0 {
        return Err(CatalogError::Unsupported("A_0 has no points".into()));
    }
    let gens = match n {
        1 | 2 => Vec::new(),
        3 => vec![three_cycle(n)],
        _ if n % 2 == 1 => vec![three_cycle(n), full_cycle(n)],
        _ => {
            // For even n the full cycle is odd; shift it off the first point.
            let images: Vec<u32> = (0..n as u32)
                .map(|i| if i == 0 { 0 } else if i == n as u32 - 1 { 1 } else { i + 1 })
                .collect();
            vec![three_cycle(n), Permutation::from_images(images).expect("valid cycle")]
        }
    };
    Ok(Group::build(n, gens)?)
}

/// The cyclic group C_n on `n` points.
pub fn make_cyclic(n: usize) -> Result<Group, CatalogError> {
    if n == 0 {
        return Err(CatalogError::Unsupported("C_0 has no points".into()));
    }
    let gens = if n >= 2 { vec![full_cycle(n)] } else { Vec::new() };
    Ok(Group::build(n, gens)?)
}

/// The dihedral group D_n of order `2n`, acting on the `n` vertices of a
/// regular n-gon. Needs `n ≥ 3`; smaller polygons degenerate.
pub fn make_dihedral(n: usize) -> Result<Group, CatalogError> {
    if n < 3 {
        return Err(CatalogError::Unsupported(format!(
            "D_{n} needs at least 3 vertices"
        )));
    }
    // Reflection fixing vertex 1: i ↦ n + 2 - i.
    let reflection: Vec<u32> = (0..n as u32)
        .map(|i| if i == 0 { 0 } else { n as u32 - i })
        .collect();
    let gens = vec![
        full_cycle(n),
        Permutation::from_images(reflection).expect("valid reflection"),
    ];
    Ok(Group::build(n, gens)?)
}

/// The quaternion group Q8 in its regular representation on 8 points.
///
/// Points stand for 1, -1, i, -i, j, -j, k, -k in that order; the
/// generators are left multiplication by i and by j.
pub fn make_quaternion() -> Group {
    let mult_i = Permutation::parse_cycles("(1 3 2 4)(5 7 6 8)", 8).expect("valid");
    let mult_j = Permutation::parse_cycles("(1 5 2 6)(3 8 4 7)", 8).expect("valid");
    Group::build(8, vec![mult_i, mult_j]).expect("Q8 builds")
}

/// The direct product acting on the disjoint union of the two point sets.
pub fn direct_product(g: &Group, h: &Group) -> Result<Group, CatalogError> {
    let dg = g.degree();
    let dh = h.degree();
    let degree = dg + dh;
    let mut gens = Vec::new();
    for gen in g.generators() {
        let mut images: Vec<u32> = gen.images().to_vec();
        images.extend(dg as u32..(dg + dh) as u32);
        gens.push(Permutation::from_images(images).expect("padded generator is valid"));
    }
    for gen in h.generators() {
        let mut images: Vec<u32> = (0..dg as u32).collect();
        images.extend(gen.images().iter().map(|&i| i + dg as u32));
        gens.push(Permutation::from_images(images).expect("shifted generator is valid"));
    }
    Ok(Group::build(degree, gens)?)
}

/// Loads a group from the group-file format.
pub fn load_group_file(path: &Path) -> Result<Group, CatalogError> {
    let text = fs::read_to_string(path).map_err(|source| CatalogError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_group_file(&text)
}

pub fn parse_group_file(text: &str) -> Result<Group, CatalogError> {
    let mut degree: Option<usize> = None;
    let mut gens = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        match degree {
            None => {
                let rest = content.strip_prefix("degree").ok_or(CatalogError::Parse {
                    line,
                    message: "expected `degree n` before any generators".into(),
                })?;
                let n: usize = rest.trim().parse().map_err(|_| CatalogError::Parse {
                    line,
                    message: format!("invalid degree {:?}", rest.trim()),
                })?;
                degree = Some(n);
            }
            Some(n) => {
                let gen = Permutation::parse_cycles(content, n)
                    .map_err(|source| CatalogError::BadPermutation { line, source })?;
                gens.push(gen);
            }
        }
    }
    let degree = degree.ok_or(CatalogError::Parse {
        line: text.lines().count().max(1),
        message: "missing `degree n` line".into(),
    })?;
    if degree == 0 {
        return Err(CatalogError::Parse {
            line: 1,
            message: "degree must be at least 1".into(),
        });
    }
    Ok(Group::build(degree, gens)?)
}

/// Renders a group in the group-file format; reloading reproduces the same
/// element table.
pub fn format_group_file(group: &Group) -> String {
    let mut out = format!("degree {}\n", group.degree());
    for gen in group.generators() {
        out.push_str(&gen.to_string());
        out.push('\n');
    }
    out
}

pub fn save_group_file(group: &Group, path: &Path) -> Result<(), CatalogError> {
    fs::write(path, format_group_file(group)).map_err(|source| CatalogError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn transposition(degree: usize) -> Permutation {
    Permutation::parse_cycles("(1 2)", degree).expect("valid transposition")
}

fn full_cycle(degree: usize) -> Permutation {
    let images: Vec<u32> = (0..degree as u32).map(|i| (i + 1) % degree as u32).collect();
    Permutation::from_images(images).expect("valid full cycle")
}

fn three_cycle(degree: usize) -> Permutation {
    Permutation::parse_cycles("(1 2 3)", degree).expect("valid 3-cycle")
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    #[test]
    fn symmetric_orders() {
        for (n, order) in [(1, 1), (2, 2), (3, 6), (4, 24), (5, 120)] {
            assert_eq!(make_symmetric(n).unwrap().order(), order, "S_{n}");
        }
    }

    #[test]
    fn alternating_orders() {
        for (n, order) in [(1, 1), (2, 1), (3, 3), (4, 12), (5, 60), (6, 360)] {
            assert_eq!(make_alternating(n).unwrap().order(), order, "A_{n}");
        }
    }

    #[test]
    fn cyclic_and_dihedral_orders() {
        for n in 1..=12 {
            assert_eq!(make_cyclic(n).unwrap().order(), n, "C_{n}");
        }
        for n in 3..=12 {
            assert_eq!(make_dihedral(n).unwrap().order(), 2 * n, "D_{n}");
        }
        assert!(make_dihedral(2).is_err());
    }

    #[test]
    fn quaternion_order_census() {
        let q8 = make_quaternion();
        assert_eq!(q8.order(), 8);
        let mut census: BTreeMap<usize, usize> = BTreeMap::new();
        for e in q8.elements() {
            *census.entry(e.order()).or_default() += 1;
        }
        assert_eq!(census, BTreeMap::from([(1, 1), (2, 1), (4, 6)]));
        // Nonabelian with a unique involution: that pins Q8 among order-8 groups.
        let gens = q8.generators();
        assert_ne!(gens[0].compose(&gens[1]), gens[1].compose(&gens[0]));
    }

    #[test]
    fn direct_products() {
        let c2 = make_cyclic(2).unwrap();
        let c3 = make_cyclic(3).unwrap();
        let c6 = direct_product(&c2, &c3).unwrap();
        assert_eq!(c6.order(), 6);
        for a in c6.elements() {
            for b in c6.elements() {
                assert_eq!(a.compose(b), b.compose(a), "C2 x C3 is abelian");
            }
        }
        let s3 = make_symmetric(3).unwrap();
        assert_eq!(direct_product(&s3, &Group::trivial(1)).unwrap().order(), 6);
        assert_eq!(direct_product(&s3, &c2).unwrap().order(), 12);
    }

    #[test]
    fn group_file_roundtrip() {
        let s3 = make_symmetric(3).unwrap();
        let text = format_group_file(&s3);
        let reloaded = parse_group_file(&text).unwrap();
        assert!(reloaded.same_group(&s3));
    }

    #[test]
    fn group_file_examples() {
        let g = parse_group_file("degree 3\n(1 2 3)\n(1 2)\n").unwrap();
        assert_eq!(g.order(), 6);

        let trivial = parse_group_file("degree 5\n").unwrap();
        assert_eq!(trivial.order(), 1);
        assert_eq!(trivial.degree(), 5);

        let commented = parse_group_file("# a comment\ndegree 2\n(1 2) # swap\n").unwrap();
        assert_eq!(commented.order(), 2);
    }

    #[test]
    fn group_file_errors_carry_line_numbers() {
        match parse_group_file("degree 4\n(1 9)\n").unwrap_err() {
            CatalogError::BadPermutation { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected error {other:?}"),
        }
        match parse_group_file("(1 2)\n").unwrap_err() {
            CatalogError::Parse { line, .. } => assert_eq!(line, 1),
            other => panic!("unexpected error {other:?}"),
        }
        assert!(parse_group_file("").is_err());
    }

    #[test]
    fn file_io_roundtrip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("s4.group");
        let s4 = make_symmetric(4).unwrap();
        save_group_file(&s4, &path).unwrap();
        let reloaded = load_group_file(&path).unwrap();
        assert!(reloaded.same_group(&s4));
    }
}
