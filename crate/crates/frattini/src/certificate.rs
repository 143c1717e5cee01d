//! Replayable normality certificates.
//!
//! A certificate records, for one pair `(x, g)` with `x ∈ K` and `g ∈ G`,
//! everything needed to conclude `x^g ∈ K` by elementary steps: a word in
//! Sylow elements whose product is `x`, a decomposition `g = a·b` with `a`
//! normalizing the relevant Sylow subgroup and `b ∈ K` for every Sylow
//! index the word uses, the conjugated letters together with the conjugate
//! Sylow subgroup each lands in, and the final product. The checker replays
//! all of it from scratch using only composition, inversion, conjugation
//! and element-table membership.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::argument::{
    decompose_in_product, frattini_condition, sylow_word, word_product, FrattiniError, WordLetter,
};
use crate::group::Group;
use crate::perm::{PermError, Permutation};
use crate::subgroup::{conjugate_subgroup, normalizer, Subgroup};
use crate::sylow::all_sylow_subgroups;

/// The decomposition `g = a·b` attached to one Sylow index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetDecomposition {
    pub sylow_index: usize,
    pub a: Permutation,
    pub b: Permutation,
}

/// One conjugated letter `l^g` together with the generators of the
/// conjugate Sylow subgroup `P^b` it lands in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugatedLetter {
    pub element: Permutation,
    pub landing_generators: Vec<Permutation>,
}

/// A self-contained transcript certifying `x^g ∈ K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalityCertificate {
    pub degree: usize,
    pub group_generators: Vec<Permutation>,
    pub subgroup_generators: Vec<Permutation>,
    pub x: Permutation,
    pub g: Permutation,
    pub word: Vec<WordLetter>,
    pub decompositions: Vec<CosetDecomposition>,
    pub conjugated_letters: Vec<ConjugatedLetter>,
    pub result: Permutation,
}

/// Why a certificate was rejected.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CheckFailure {
    #[error("a permutation in the certificate has the wrong degree")]
    DegreeMismatch,
    #[error("the recorded group generators do not generate the given group")]
    GroupMismatch,
    #[error("the recorded subgroup generators do not generate the given subgroup")]
    SubgroupMismatch,
    #[error("x is not an element of K")]
    XOutsideSubgroup,
    #[error("g is not an element of G")]
    GOutsideGroup,
    #[error("letter {position} names Sylow index {index}, but K has only {count} Sylow subgroups")]
    BadSylowIndex { position: usize, index: usize, count: usize },
    #[error("letter {position} is not an element of its declared Sylow subgroup")]
    LetterOutsideSylow { position: usize },
    #[error("the product of the word letters is not x")]
    WordProductMismatch,
    #[error("decompositions do not match the set of Sylow indices the word uses")]
    DecompositionIndexMismatch,
    #[error("decomposition for Sylow index {index}: a is not in the normalizer of P")]
    NotInNormalizer { index: usize },
    #[error("decomposition for Sylow index {index}: b is not in K")]
    BOutsideSubgroup { index: usize },
    #[error("decomposition for Sylow index {index}: a·b differs from g")]
    DecompositionProductMismatch { index: usize },
    #[error("certificate has {found} conjugated letters for a word of length {expected}")]
    ConjugatedLengthMismatch { expected: usize, found: usize },
    #[error("conjugated letter {position} is not the conjugate of its word letter by g")]
    ConjugatedLetterMismatch { position: usize },
    #[error("conjugated letter {position}: recorded landing subgroup differs from P^b")]
    LandingSubgroupMismatch { position: usize },
    #[error("conjugated letter {position} lies outside its landing subgroup")]
    OutsideLandingSubgroup { position: usize },
    #[error("conjugated letter {position}: landing subgroup is not contained in K")]
    LandingOutsideK { position: usize },
    #[error("the product of the conjugated letters is not the recorded result")]
    ConjugatedProductMismatch,
    #[error("the recorded result differs from x^g")]
    ResultMismatch,
    #[error("the result lies outside K")]
    ResultOutsideSubgroup,
    #[error("could not recompute the Sylow subgroups of K: {detail}")]
    SylowRecompute { detail: String },
}

/// Builds the certificate for `x^g ∈ K`.
///
/// Requires the coverage condition to hold for `(G, K)` — by the converse
/// direction that is exactly when `K ◁ G` and certificates exist for every
/// pair. The construction is verified internally before it is returned.
pub fn build_certificate(
    g: &Group,
    k: &Subgroup,
    x: &Permutation,
    conjugator: &Permutation,
) -> Result<NormalityCertificate, FrattiniError> {
    let k = k.in_group(g).map_err(|_| FrattiniError::NotSubgroup)?;
    if x.degree() != k.degree() || !k.contains(x) {
        return Err(FrattiniError::OutsideSubgroup { element: x.to_string() });
    }
    if conjugator.degree() != g.degree() || !g.contains(conjugator) {
        return Err(FrattiniError::OutsideGroup { element: conjugator.to_string() });
    }
    if !frattini_condition(g, &k)?.condition_holds {
        return Err(FrattiniError::ConditionFails);
    }

    let word = sylow_word(&k, x)?;
    let flat = all_sylow_subgroups(&k)?;

    let mut used: Vec<usize> = word.iter().map(|l| l.sylow_index).collect();
    used.sort_unstable();
    used.dedup();

    let mut decompositions = Vec::new();
    let mut landing_by_index: BTreeMap<usize, Subgroup> = BTreeMap::new();
    for &index in &used {
        let n = normalizer(g, &flat[index])?;
        let (a, b) = decompose_in_product(g, &k, &n, conjugator)?;
        let landing = conjugate_subgroup(&flat[index], &b)?;
        landing_by_index.insert(index, landing);
        decompositions.push(CosetDecomposition { sylow_index: index, a, b });
    }

    let mut conjugated_letters = Vec::new();
    for letter in &word {
        let element = letter.element.conjugate(conjugator);
        let landing = &landing_by_index[&letter.sylow_index];
        if !landing.contains(&element) {
            return Err(FrattiniError::Internal {
                detail: format!("conjugated letter {element} missed P^b"),
            });
        }
        if !landing.elements().iter().all(|e| k.contains(e)) {
            return Err(FrattiniError::Internal {
                detail: "landing subgroup escapes K".into(),
            });
        }
        conjugated_letters.push(ConjugatedLetter {
            element,
            landing_generators: landing.generators().to_vec(),
        });
    }

    let result = conjugated_letters
        .iter()
        .fold(g.identity(), |acc, l| acc.compose(&l.element));
    if result != x.conjugate(conjugator) || !k.contains(&result) {
        return Err(FrattiniError::Internal {
            detail: format!("certificate product {result} does not reproduce x^g in K"),
        });
    }

    Ok(NormalityCertificate {
        degree: g.degree(),
        group_generators: g.generators().to_vec(),
        subgroup_generators: k.generators().to_vec(),
        x: x.clone(),
        g: conjugator.clone(),
        word,
        decompositions,
        conjugated_letters,
        result,
    })
}

/// Replays a certificate against `(G, K)` from scratch.
///
/// Nothing from the builder is trusted: the Sylow list is recomputed
/// deterministically from `K`, and every claim is reduced to composition,
/// inversion, conjugation and element-table membership. `Ok(())` means the
/// certificate is accepted; the error names the first violated invariant.
pub fn check_certificate(
    cert: &NormalityCertificate,
    g: &Group,
    k: &Subgroup,
) -> Result<(), CheckFailure> {
    let degree = cert.degree;
    if g.degree() != degree || k.degree() != degree {
        return Err(CheckFailure::DegreeMismatch);
    }
    let all_perms = cert
        .group_generators
        .iter()
        .chain(&cert.subgroup_generators)
        .chain([&cert.x, &cert.g, &cert.result])
        .chain(cert.word.iter().map(|l| &l.element))
        .chain(cert.decompositions.iter().flat_map(|d| [&d.a, &d.b]))
        .chain(cert.conjugated_letters.iter().map(|c| &c.element))
        .chain(cert.conjugated_letters.iter().flat_map(|c| &c.landing_generators));
    if all_perms.into_iter().any(|p| p.degree() != degree) {
        return Err(CheckFailure::DegreeMismatch);
    }

    if !regenerates(degree, &cert.group_generators, g.elements()) {
        return Err(CheckFailure::GroupMismatch);
    }
    if !regenerates(degree, &cert.subgroup_generators, k.elements()) {
        return Err(CheckFailure::SubgroupMismatch);
    }
    if !k.contains(&cert.x) {
        return Err(CheckFailure::XOutsideSubgroup);
    }
    if !g.contains(&cert.g) {
        return Err(CheckFailure::GOutsideGroup);
    }

    let flat = all_sylow_subgroups(k).map_err(|e| CheckFailure::SylowRecompute {
        detail: e.to_string(),
    })?;

    for (position, letter) in cert.word.iter().enumerate() {
        if letter.sylow_index >= flat.len() {
            return Err(CheckFailure::BadSylowIndex {
                position,
                index: letter.sylow_index,
                count: flat.len(),
            });
        }
        if !flat[letter.sylow_index].contains(&letter.element) {
            return Err(CheckFailure::LetterOutsideSylow { position });
        }
    }
    if word_product(degree, &cert.word) != cert.x {
        return Err(CheckFailure::WordProductMismatch);
    }

    let mut used: Vec<usize> = cert.word.iter().map(|l| l.sylow_index).collect();
    used.sort_unstable();
    used.dedup();
    let recorded: Vec<usize> = cert.decompositions.iter().map(|d| d.sylow_index).collect();
    if recorded != used {
        return Err(CheckFailure::DecompositionIndexMismatch);
    }

    let mut landing_tables: BTreeMap<usize, Vec<Permutation>> = BTreeMap::new();
    for decomposition in &cert.decompositions {
        let index = decomposition.sylow_index;
        let sylow = &flat[index];
        // a ∈ N_G(P) means a ∈ G and conjugation by a maps P onto itself.
        if !g.contains(&decomposition.a)
            || !sylow
                .elements()
                .iter()
                .all(|e| sylow.contains(&e.conjugate(&decomposition.a)))
        {
            return Err(CheckFailure::NotInNormalizer { index });
        }
        if !k.contains(&decomposition.b) {
            return Err(CheckFailure::BOutsideSubgroup { index });
        }
        if decomposition.a.compose(&decomposition.b) != cert.g {
            return Err(CheckFailure::DecompositionProductMismatch { index });
        }
        let mut table: Vec<Permutation> = sylow
            .elements()
            .iter()
            .map(|e| e.conjugate(&decomposition.b))
            .collect();
        table.sort_unstable();
        landing_tables.insert(index, table);
    }

    if cert.conjugated_letters.len() != cert.word.len() {
        return Err(CheckFailure::ConjugatedLengthMismatch {
            expected: cert.word.len(),
            found: cert.conjugated_letters.len(),
        });
    }
    for (position, (letter, conjugated)) in
        cert.word.iter().zip(&cert.conjugated_letters).enumerate()
    {
        if conjugated.element != letter.element.conjugate(&cert.g) {
            return Err(CheckFailure::ConjugatedLetterMismatch { position });
        }
        let landing = &landing_tables[&letter.sylow_index];
        if !regenerates(degree, &conjugated.landing_generators, landing) {
            return Err(CheckFailure::LandingSubgroupMismatch { position });
        }
        if landing.binary_search(&conjugated.element).is_err() {
            return Err(CheckFailure::OutsideLandingSubgroup { position });
        }
        if !landing.iter().all(|e| k.contains(e)) {
            return Err(CheckFailure::LandingOutsideK { position });
        }
    }

    let product = cert
        .conjugated_letters
        .iter()
        .fold(Permutation::identity(degree), |acc, l| acc.compose(&l.element));
    if product != cert.result {
        return Err(CheckFailure::ConjugatedProductMismatch);
    }
    if cert.result != cert.x.conjugate(&cert.g) {
        return Err(CheckFailure::ResultMismatch);
    }
    if !k.contains(&cert.result) {
        return Err(CheckFailure::ResultOutsideSubgroup);
    }
    Ok(())
}

/// True iff `⟨gens⟩` equals the sorted table `expected`.
fn regenerates(degree: usize, gens: &[Permutation], expected: &[Permutation]) -> bool {
    match Group::build_with_cap(degree, gens.to_vec(), expected.len()) {
        Ok(group) => group.elements() == expected,
        Err(_) => false,
    }
}

// --- text serialization ------------------------------------------------

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CertParseError {
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("missing field {0:?}")]
    MissingField(&'static str),
    #[error("field {field:?} on line {line}: {source}")]
    Perm {
        field: String,
        line: usize,
        source: PermError,
    },
}

impl NormalityCertificate {
    /// Renders the certificate as the line-oriented `key: value` document
    /// the checker and the CLI consume. List fields carry their length on
    /// the bare key and one `key.N:` line per entry.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let perm_list = |perms: &[Permutation]| {
            perms
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join("; ")
        };
        out.push_str(&format!("degree: {}\n", self.degree));
        out.push_str(&format!("group_generators: {}\n", perm_list(&self.group_generators)));
        out.push_str(&format!(
            "subgroup_generators: {}\n",
            perm_list(&self.subgroup_generators)
        ));
        out.push_str(&format!("x: {}\n", self.x));
        out.push_str(&format!("g: {}\n", self.g));
        out.push_str(&format!("word: {}\n", self.word.len()));
        for (i, letter) in self.word.iter().enumerate() {
            out.push_str(&format!("word.{}: {} @ {}\n", i, letter.element, letter.sylow_index));
        }
        out.push_str(&format!("decompositions: {}\n", self.decompositions.len()));
        for (i, d) in self.decompositions.iter().enumerate() {
            out.push_str(&format!(
                "decompositions.{}: sylow {} | a = {} | b = {}\n",
                i, d.sylow_index, d.a, d.b
            ));
        }
        out.push_str(&format!("conjugated_letters: {}\n", self.conjugated_letters.len()));
        for (i, c) in self.conjugated_letters.iter().enumerate() {
            out.push_str(&format!(
                "conjugated_letters.{}: {} in <{}>\n",
                i,
                c.element,
                perm_list(&c.landing_generators)
            ));
        }
        out.push_str(&format!("result: {}\n", self.result));
        out
    }

    /// Parses the format produced by [`NormalityCertificate::to_text`].
    pub fn from_text(text: &str) -> Result<NormalityCertificate, CertParseError> {
        let mut fields: BTreeMap<String, (usize, String)> = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let (key, value) = trimmed.split_once(':').ok_or(CertParseError::Line {
                line,
                message: "expected `key: value`".into(),
            })?;
            let key = key.trim().to_string();
            if fields.contains_key(&key) {
                return Err(CertParseError::Line {
                    line,
                    message: format!("duplicate field {key:?}"),
                });
            }
            fields.insert(key, (line, value.trim().to_string()));
        }

        let take = |fields: &BTreeMap<String, (usize, String)>,
                    key: &'static str|
         -> Result<(usize, String), CertParseError> {
            fields
                .get(key)
                .cloned()
                .ok_or(CertParseError::MissingField(key))
        };

        let (degree_line, degree_text) = take(&fields, "degree")?;
        let degree: usize = degree_text.parse().map_err(|_| CertParseError::Line {
            line: degree_line,
            message: format!("invalid degree {degree_text:?}"),
        })?;

        let parse_perm = |field: &str, line: usize, text: &str| {
            Permutation::parse_cycles(text, degree).map_err(|source| CertParseError::Perm {
                field: field.to_string(),
                line,
                source,
            })
        };
        let parse_list = |field: &str, line: usize, text: &str| {
            let text = text.trim();
            if text.is_empty() {
                return Ok(Vec::new());
            }
            text.split(';')
                .map(|chunk| parse_perm(field, line, chunk.trim()))
                .collect::<Result<Vec<_>, _>>()
        };
        let parse_count = |field: &str, line: usize, text: &str| -> Result<usize, CertParseError> {
            text.parse().map_err(|_| CertParseError::Line {
                line,
                message: format!("field {field:?} expects a count, got {text:?}"),
            })
        };

        let (line, value) = take(&fields, "group_generators")?;
        let group_generators = parse_list("group_generators", line, &value)?;
        let (line, value) = take(&fields, "subgroup_generators")?;
        let subgroup_generators = parse_list("subgroup_generators", line, &value)?;
        let (line, value) = take(&fields, "x")?;
        let x = parse_perm("x", line, &value)?;
        let (line, value) = take(&fields, "g")?;
        let g = parse_perm("g", line, &value)?;

        let (line, value) = take(&fields, "word")?;
        let word_len = parse_count("word", line, &value)?;
        let mut word = Vec::with_capacity(word_len);
        for i in 0..word_len {
            let key = format!("word.{i}");
            let (line, value) = fields
                .get(key.as_str())
                .cloned()
                .ok_or(CertParseError::Line {
                    line,
                    message: format!("missing entry {key:?}"),
                })?;
            let (perm_text, index_text) = value.rsplit_once('@').ok_or(CertParseError::Line {
                line,
                message: format!("entry {key:?} expects `cycles @ index`"),
            })?;
            let element = parse_perm(&key, line, perm_text.trim())?;
            let sylow_index = index_text.trim().parse().map_err(|_| CertParseError::Line {
                line,
                message: format!("invalid Sylow index {index_text:?}"),
            })?;
            word.push(WordLetter { element, sylow_index });
        }

        let (line, value) = take(&fields, "decompositions")?;
        let dec_len = parse_count("decompositions", line, &value)?;
        let mut decompositions = Vec::with_capacity(dec_len);
        for i in 0..dec_len {
            let key = format!("decompositions.{i}");
            let (line, value) = fields
                .get(key.as_str())
                .cloned()
                .ok_or(CertParseError::Line {
                    line,
                    message: format!("missing entry {key:?}"),
                })?;
            let parts: Vec<&str> = value.split('|').map(str::trim).collect();
            let bad = || CertParseError::Line {
                line,
                message: format!("entry {key:?} expects `sylow N | a = cycles | b = cycles`"),
            };
            if parts.len() != 3 {
                return Err(bad());
            }
            let sylow_index = parts[0]
                .strip_prefix("sylow")
                .ok_or_else(bad)?
                .trim()
                .parse()
                .map_err(|_| bad())?;
            let a = parse_perm(&key, line, parts[1].strip_prefix("a =").ok_or_else(bad)?.trim())?;
            let b = parse_perm(&key, line, parts[2].strip_prefix("b =").ok_or_else(bad)?.trim())?;
            decompositions.push(CosetDecomposition { sylow_index, a, b });
        }

        let (line, value) = take(&fields, "conjugated_letters")?;
        let conj_len = parse_count("conjugated_letters", line, &value)?;
        let mut conjugated_letters = Vec::with_capacity(conj_len);
        for i in 0..conj_len {
            let key = format!("conjugated_letters.{i}");
            let (line, value) = fields
                .get(key.as_str())
                .cloned()
                .ok_or(CertParseError::Line {
                    line,
                    message: format!("missing entry {key:?}"),
                })?;
            let bad = || CertParseError::Line {
                line,
                message: format!("entry {key:?} expects `cycles in <gens>`"),
            };
            let (perm_text, rest) = value.split_once(" in ").ok_or_else(bad)?;
            let rest = rest.trim();
            let inner = rest
                .strip_prefix('<')
                .and_then(|r| r.strip_suffix('>'))
                .ok_or_else(bad)?;
            let element = parse_perm(&key, line, perm_text.trim())?;
            let landing_generators = parse_list(&key, line, inner)?;
            conjugated_letters.push(ConjugatedLetter { element, landing_generators });
        }

        let (line, value) = take(&fields, "result")?;
        let result = parse_perm("result", line, &value)?;

        Ok(NormalityCertificate {
            degree,
            group_generators,
            subgroup_generators,
            x,
            g,
            word,
            decompositions,
            conjugated_letters,
            result,
        })
    }
}

impl fmt::Display for NormalityCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
