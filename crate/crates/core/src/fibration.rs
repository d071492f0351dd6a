//! Lefschetz fibrations and surface bundles over surfaces: validation,
//! combinatorial data, signatures, subtraction, and fiber sums.
//!
//! A fibration over a closed base of genus g with s singular fibers is
//! encoded by g handle pairs (alpha_i, beta_i) and an ordered list of
//! twist letters whose product closes the relator
//! prod [alpha_i, beta_i] * prod t_i = 1 in Sp(2h, Z). The signature is
//! assembled from the cocycle values of the fiber complement over the
//! holed base plus the local contributions of the singular fibers
//! (0 for a nonseparating vanishing cycle, -1 for a separating one;
//! signs reverse for left-handed letters, which are supported as an
//! extension behind the chirality flag).

use std::collections::BTreeMap;

use serde::Serialize;

use crate::atlas::{self, CurveAtlas, SepType};
use crate::error::{Error, Result};
use crate::meyer;
use crate::sympl::{commutator, HomologyVector, SymplecticMatrix, TwistSign};
use crate::words::{self, Chirality, EvalCtx, Factorization, TwistLetter, Word};

/// Declared section metadata; never computed, only propagated.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SectionData {
    pub self_intersection: i64,
    pub declared: String,
}

/// One `singular` declaration from a fibration file.
#[derive(Debug, Clone)]
pub struct SingularDecl {
    pub letter: Word,
    pub declared_type: usize,
    pub chirality: Chirality,
}

/// A Lefschetz fibration over a closed base surface.
#[derive(Debug, Clone)]
pub struct Fibration {
    pub name: String,
    pub h: usize,
    pub base_genus: usize,
    pub atlas: CurveAtlas,
    pub defs: BTreeMap<String, Word>,
    pub handles: Vec<(Word, Word)>,
    pub singulars: Vec<SingularDecl>,
    pub section: Option<SectionData>,
}

/// Per-check outcome of `validate`.
#[derive(Debug, Clone, Serialize)]
pub struct ValidationCheck {
    pub check: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ValidationReport {
    pub fibration: String,
    pub checks: Vec<ValidationCheck>,
}

impl ValidationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&ValidationCheck> {
        self.checks.iter().find(|c| !c.passed)
    }
}

/// Signature report in the shape the CLI emits.
#[derive(Debug, Clone, Serialize)]
pub struct SigReport {
    pub signature: i64,
    pub euler: i64,
    pub base_genus: usize,
    pub fiber_genus: usize,
    pub mu_comb: Vec<usize>,
    pub checks: Vec<ValidationCheck>,
    pub convention: Convention,
}

/// The calibrated evaluation convention, echoed in every report.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct Convention {
    pub twist_sign: &'static str,
    pub word_order: &'static str,
}

impl Convention {
    pub fn new(sign: TwistSign) -> Self {
        Convention {
            twist_sign: sign.label(),
            word_order: "left-to-right",
        }
    }
}

/// Data of one singular fiber after resolution: everything subtraction
/// and fiber sums need.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LetterData {
    pub class: HomologyVector,
    pub type_index: usize,
    pub chirality: Chirality,
    pub label: String,
}

/// Result of evaluating a fibration (or of the subtraction calculus):
/// the invariants survive even where no explicit monodromy word for the
/// derived object is written down.
#[derive(Debug, Clone)]
pub struct FibrationSummary {
    pub name: String,
    pub h: usize,
    pub base_genus: usize,
    pub sigma: i64,
    pub fibers: Vec<LetterData>,
    pub section: Option<SectionData>,
    pub provenance: Vec<String>,
}

impl FibrationSummary {
    pub fn singular_count(&self) -> usize {
        self.fibers.len()
    }

    pub fn is_bundle(&self) -> bool {
        self.fibers.is_empty()
    }

    pub fn euler(&self) -> i64 {
        euler_characteristic(self.h, self.base_genus, self.fibers.len())
    }

    pub fn mu_comb(&self) -> Vec<usize> {
        let mut mu = vec![0usize; self.h / 2 + 1];
        for f in &self.fibers {
            mu[f.type_index] += 1;
        }
        mu
    }
}

/// chi(X) = chi(F) chi(B) + s.
pub fn euler_characteristic(h: usize, base_genus: usize, s: usize) -> i64 {
    let hf = 2 - 2 * h as i64;
    let hb = 2 - 2 * base_genus as i64;
    hf * hb + s as i64
}

impl Fibration {
    /// Resolve the singular letters into concrete classes under the
    /// given convention.
    pub fn letters(&self, sign: TwistSign) -> Result<Vec<LetterData>> {
        let ctx = EvalCtx::new(&self.atlas, &self.defs, sign);
        self.singulars
            .iter()
            .map(|decl| {
                let Word::Twist { curve, under, .. } = &decl.letter else {
                    return Err(Error::FibrationFile(
                        "singular declaration must be a single twist letter".into(),
                    ));
                };
                let mut visiting = Vec::new();
                let class =
                    words::resolve_class(curve, under.as_deref(), &ctx, &mut visiting)?;
                let base = self.atlas.curve(curve)?;
                Ok(LetterData {
                    class,
                    type_index: base.sep.type_index(self.h),
                    chirality: decl.chirality,
                    label: words::print_word(&decl.letter),
                })
            })
            .collect()
    }

    pub fn factorization(&self, sign: TwistSign) -> Result<Factorization> {
        let letters = self
            .letters(sign)?
            .into_iter()
            .map(|l| TwistLetter {
                sep: if l.type_index == 0 {
                    SepType::Nonseparating
                } else {
                    SepType::Separating {
                        split: l.type_index,
                    }
                },
                class: l.class,
                chirality: l.chirality,
                label: l.label,
            })
            .collect();
        Ok(Factorization {
            h: self.h,
            letters,
        })
    }

    fn handle_images(&self, sign: TwistSign) -> Result<Vec<(SymplecticMatrix, SymplecticMatrix)>> {
        let ctx = EvalCtx::new(&self.atlas, &self.defs, sign);
        self.handles
            .iter()
            .map(|(a, b)| Ok((words::evaluate(a, &ctx)?, words::evaluate(b, &ctx)?)))
            .collect()
    }

    /// Full relator product prod [alpha_i, beta_i] * prod t_i.
    pub fn relator_image(&self, sign: TwistSign) -> Result<SymplecticMatrix> {
        let mut acc = SymplecticMatrix::identity(self.h);
        for (a, b) in self.handle_images(sign)? {
            acc = acc.mul(&commutator(&a, &b));
        }
        let fact = self.factorization(sign)?;
        Ok(acc.mul(&fact.product(sign)?))
    }

    /// Check the Sp-level relator identity, the atlas constraints, and
    /// the chirality/type declarations.
    pub fn validate(&self, sign: TwistSign) -> ValidationReport {
        let mut checks = Vec::new();
        let atlas_report = self.atlas.check_constraints(sign);
        checks.push(ValidationCheck {
            check: "atlas".into(),
            passed: atlas_report.all_passed(),
            detail: match atlas_report.first_failure() {
                None => format!("atlas `{}` certified", self.atlas.name()),
                Some(f) => format!("{}: {}", f.constraint, f.detail),
            },
        });
        for (i, decl) in self.singulars.iter().enumerate() {
            let Word::Twist { curve, .. } = &decl.letter else {
                checks.push(ValidationCheck {
                    check: format!("singular {i}"),
                    passed: false,
                    detail: "not a twist letter".into(),
                });
                continue;
            };
            match self.atlas.curve(curve) {
                Ok(c) => {
                    let ti = c.sep.type_index(self.h);
                    checks.push(ValidationCheck {
                        check: format!("singular {i} type"),
                        passed: ti == decl.declared_type,
                        detail: format!("declared {} computed {}", decl.declared_type, ti),
                    });
                }
                Err(e) => checks.push(ValidationCheck {
                    check: format!("singular {i}"),
                    passed: false,
                    detail: e.to_string(),
                }),
            }
        }
        match self.relator_image(sign) {
            Ok(m) => checks.push(ValidationCheck {
                check: "relator".into(),
                passed: m.is_identity(),
                detail: if m.is_identity() {
                    "product is the identity in Sp".into()
                } else {
                    "product differs from the identity in Sp".into()
                },
            }),
            Err(e) => checks.push(ValidationCheck {
                check: "relator".into(),
                passed: false,
                detail: e.to_string(),
            }),
        }
        ValidationReport {
            fibration: self.name.clone(),
            checks,
        }
    }

    /// Fiber counts by type.
    pub fn mu_comb(&self) -> Vec<usize> {
        let mut mu = vec![0usize; self.h / 2 + 1];
        for decl in &self.singulars {
            if decl.declared_type < mu.len() {
                mu[decl.declared_type] += 1;
            }
        }
        mu
    }

    /// Total-space signature: cocycle sum for the complement over the
    /// holed base, plus local terms of the singular fibers.
    pub fn signature(&self, sign: TwistSign) -> Result<i64> {
        let handles = self.handle_images(sign)?;
        let letters = self.letters(sign)?;
        let gammas: Vec<SymplecticMatrix> = self
            .factorization(sign)?
            .letters
            .iter()
            .map(|l| l.matrix(self.h, sign))
            .collect::<Result<_>>()?;
        let complement = signature_boundary(self.h, &handles, &gammas)?;
        let local: i64 = letters.iter().map(local_term).sum();
        Ok(complement + local)
    }

    pub fn sig_report(&self, sign: TwistSign) -> Result<SigReport> {
        let validation = self.validate(sign);
        if let Some(fail) = validation.first_failure() {
            if fail.check == "relator" {
                return Err(Error::RelatorViolation(fail.detail.clone()));
            }
            return Err(Error::ConstraintViolation {
                atlas: self.atlas.name().to_string(),
                detail: format!("{}: {}", fail.check, fail.detail),
            });
        }
        Ok(SigReport {
            signature: self.signature(sign)?,
            euler: euler_characteristic(self.h, self.base_genus, self.singulars.len()),
            base_genus: self.base_genus,
            fiber_genus: self.h,
            mu_comb: self.mu_comb(),
            checks: validation.checks,
            convention: Convention::new(sign),
        })
    }

    pub fn summarize(&self, sign: TwistSign) -> Result<FibrationSummary> {
        Ok(FibrationSummary {
            name: self.name.clone(),
            h: self.h,
            base_genus: self.base_genus,
            sigma: self.signature(sign)?,
            fibers: self.letters(sign)?,
            section: self.section.clone(),
            provenance: vec![format!("fibration `{}`", self.name)],
        })
    }
}

/// Local signature contribution of one singular fiber.
fn local_term(l: &LetterData) -> i64 {
    match (l.type_index, l.chirality) {
        (0, _) => 0,
        (_, Chirality::Right) => -1,
        // left-handed separating fiber: orientation reversal flips the sign
        (_, Chirality::Left) => 1,
    }
}

/// The cocycle formula for a bundle over the holed surface with the
/// standard presentation prod [a_i, b_i] prod c_j = 1:
///
/// ```text
/// sigma = sum_i tau(k_i, beta_i)
///       - sum_{i>=2} tau(k_1...k_{i-1}, k_i)
///       - sum_{j=1}^{r-1} tau(k_1...k_g g_1...g_{j-1}, g_j)
/// ```
///
/// with k_i = [alpha_i, beta_i], all partial products in word order.
pub fn signature_boundary(
    h: usize,
    handles: &[(SymplecticMatrix, SymplecticMatrix)],
    gammas: &[SymplecticMatrix],
) -> Result<i64> {
    let kappas: Vec<SymplecticMatrix> =
        handles.iter().map(|(a, b)| commutator(a, b)).collect();
    let mut relator = SymplecticMatrix::identity(h);
    for k in &kappas {
        relator = relator.mul(k);
    }
    for g in gammas {
        relator = relator.mul(g);
    }
    if !relator.is_identity() {
        return Err(Error::RelatorViolation(
            "monodromies do not close the surface-group relator in Sp".into(),
        ));
    }
    let mut sigma = 0i64;
    for (k, (_, b)) in kappas.iter().zip(handles) {
        sigma += meyer::tau(k, b)?;
    }
    let mut partial = SymplecticMatrix::identity(h);
    for i in 1..kappas.len() {
        partial = partial.mul(&kappas[i - 1]);
        sigma -= meyer::tau(&partial, &kappas[i])?;
    }
    if !gammas.is_empty() {
        let mut acc = partial;
        if let Some(last) = kappas.last() {
            acc = acc.mul(last);
        }
        for j in 0..gammas.len().saturating_sub(1) {
            if j > 0 {
                acc = acc.mul(&gammas[j - 1]);
            }
            sigma -= meyer::tau(&acc, &gammas[j])?;
        }
    }
    Ok(sigma)
}

// ---------------------------------------------------------------------
// Subtraction and fiber sum
// ---------------------------------------------------------------------

/// How fibers inside one matched group are compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MatchMode {
    /// Identical ordered vanishing-cycle classes (up to orientation),
    /// types, and chiralities.
    Strict,
    /// Types and chiralities only: the same-type tubular-neighborhood
    /// matching. Requires the caller to assert the gluings are
    /// isomorphic; recorded in the report.
    TypeOnly,
}

#[derive(Debug, Clone)]
pub struct SubtractOptions {
    pub mode: MatchMode,
    /// Prop-2.8-style section gluing: propagate the declared sections
    /// only when the caller asserts the lifts coincide.
    pub sections_coincide: bool,
}

impl Default for SubtractOptions {
    fn default() -> Self {
        SubtractOptions {
            mode: MatchMode::Strict,
            sections_coincide: false,
        }
    }
}

/// One matched group: indices into the minuend's and the subtrahend's
/// fiber lists.
pub type Grouping = Vec<(Vec<usize>, Vec<usize>)>;

/// Subtract f2 from f1 along the matched groups. Every fiber of f2 must
/// be covered; uncovered fibers of f1 survive into the result. The base
/// genus comes out of the Euler-characteristic bookkeeping as
/// g1 + g2 + m - 1 and the signature is sigma1 - sigma2.
pub fn subtract(
    f1: &FibrationSummary,
    f2: &FibrationSummary,
    groups: &Grouping,
    opts: &SubtractOptions,
) -> Result<FibrationSummary> {
    if f1.h != f2.h {
        return Err(Error::IncompatibleGrouping(format!(
            "fiber genus {} vs {}",
            f1.h, f2.h
        )));
    }
    let m = groups.len();
    if m == 0 {
        return Err(Error::IncompatibleGrouping("no groups given".into()));
    }
    let mut used1 = vec![false; f1.fibers.len()];
    let mut used2 = vec![false; f2.fibers.len()];
    for (g1, g2) in groups {
        if g1.len() != g2.len() {
            return Err(Error::IncompatibleGrouping(format!(
                "group sizes {} vs {}",
                g1.len(),
                g2.len()
            )));
        }
        for (&i, &j) in g1.iter().zip(g2) {
            let a = f1.fibers.get(i).ok_or(Error::IndexOutOfRange {
                index: i,
                len: f1.fibers.len(),
            })?;
            let b = f2.fibers.get(j).ok_or(Error::IndexOutOfRange {
                index: j,
                len: f2.fibers.len(),
            })?;
            if std::mem::replace(&mut used1[i], true) {
                return Err(Error::IncompatibleGrouping(format!(
                    "fiber {i} of the minuend grouped twice"
                )));
            }
            if std::mem::replace(&mut used2[j], true) {
                return Err(Error::IncompatibleGrouping(format!(
                    "fiber {j} of the subtrahend grouped twice"
                )));
            }
            if a.type_index != b.type_index || a.chirality != b.chirality {
                return Err(Error::IncompatibleGrouping(format!(
                    "fiber {i} (type {}) cannot match fiber {j} (type {})",
                    a.type_index, b.type_index
                )));
            }
            if opts.mode == MatchMode::Strict && !a.class.same_class(&b.class) {
                return Err(Error::IncompatibleGrouping(format!(
                    "fiber {i} and fiber {j} have different vanishing-cycle classes \
                     (strict matching; pass the isomorphism assertion for type-only)"
                )));
            }
        }
    }
    if !used2.iter().all(|&u| u) {
        return Err(Error::IncompatibleGrouping(
            "every fiber of the subtrahend must be matched".into(),
        ));
    }
    if used1.iter().all(|&u| u) {
        // full subtraction: combinatorial equivalence is the hypothesis
        let mu1 = f1.mu_comb();
        let mu2 = f2.mu_comb();
        if mu1 != mu2 {
            return Err(Error::CombinatorialMismatch(format!(
                "mu_comb {mu1:?} vs {mu2:?}"
            )));
        }
    }
    let base_genus = f1.base_genus + f2.base_genus + m - 1;
    let fibers: Vec<LetterData> = f1
        .fibers
        .iter()
        .zip(&used1)
        .filter(|(_, &u)| !u)
        .map(|(f, _)| f.clone())
        .collect();
    let section = match (&f1.section, &f2.section, opts.sections_coincide) {
        (Some(s1), Some(s2), true) => Some(SectionData {
            self_intersection: s1.self_intersection - s2.self_intersection,
            declared: "propagated through subtraction (coinciding lifts asserted)".into(),
        }),
        _ => None,
    };
    let mut provenance = f1.provenance.clone();
    provenance.push(format!(
        "subtract `{}` ({} groups, {:?} matching)",
        f2.name, m, opts.mode
    ));
    Ok(FibrationSummary {
        name: format!("{} - {}", f1.name, f2.name),
        h: f1.h,
        base_genus,
        sigma: f1.sigma - f2.sigma,
        fibers,
        section,
        provenance,
    })
}

/// Fiberwise connected sum along zero-square sections: fiber genera and
/// signatures add, the base stays. The result carries a section only
/// when one is explicitly re-declared.
pub fn fiber_sum(
    b1: &FibrationSummary,
    b2: &FibrationSummary,
    redeclared_section: Option<SectionData>,
) -> Result<FibrationSummary> {
    if !b1.is_bundle() || !b2.is_bundle() {
        return Err(Error::Invalid(
            "fiber sum requires honest bundles (no singular fibers)".into(),
        ));
    }
    if b1.base_genus != b2.base_genus {
        return Err(Error::BaseMismatch(b1.base_genus, b2.base_genus));
    }
    for b in [b1, b2] {
        match &b.section {
            Some(s) if s.self_intersection == 0 => {}
            _ => return Err(Error::MissingZeroSection(b.name.clone())),
        }
    }
    let mut provenance = b1.provenance.clone();
    provenance.push(format!("fiber sum with `{}`", b2.name));
    Ok(FibrationSummary {
        name: format!("{} + {}", b1.name, b2.name),
        h: b1.h + b2.h,
        base_genus: b1.base_genus,
        sigma: b1.sigma + b2.sigma,
        fibers: Vec::new(),
        section: redeclared_section,
        provenance,
    })
}

/// The trivial bundle Sigma_h x Sigma_g with its product sections.
pub fn trivial_bundle(h: usize, base_genus: usize) -> FibrationSummary {
    FibrationSummary {
        name: format!("trivial h={h} over genus {base_genus}"),
        h,
        base_genus,
        sigma: 0,
        fibers: Vec::new(),
        section: Some(SectionData {
            self_intersection: 0,
            declared: "product section of the trivial bundle".into(),
        }),
        provenance: vec![format!("trivial bundle Sigma_{h} x Sigma_{base_genus}")],
    }
}

// ---------------------------------------------------------------------
// Fibration file format
// ---------------------------------------------------------------------

/// Parse the line-oriented fibration format:
///
/// ```text
/// fiber_genus 3
/// base_genus 2
/// atlas ko
/// def phi2 = t(c3) t(b3) t(a3) t(c3)
/// handle t(a3) , phi2
/// singular t(a) type=0 chirality=right
/// section self_intersection=0 note=lifts are twists upstairs
/// ```
///
/// The atlas is stabilized to the declared fiber genus. `singular`
/// lines appear in factorization order.
pub fn parse_fibration(name: &str, src: &str, sign: TwistSign) -> Result<Fibration> {
    let mut fiber_genus: Option<usize> = None;
    let mut base_genus: Option<usize> = None;
    let mut atlas_obj: Option<CurveAtlas> = None;
    let mut defs = BTreeMap::new();
    let mut handles = Vec::new();
    let mut singulars = Vec::new();
    let mut section = None;
    for (lineno, raw) in src.lines().enumerate() {
        let lineno = lineno + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.splitn(2, char::is_whitespace);
        let key = parts.next().unwrap_or_default();
        let rest = parts.next().unwrap_or("").trim();
        let bad = |what: &str| Error::Parse {
            line: lineno,
            column: 1,
            expected: what.to_string(),
        };
        match key {
            "fiber_genus" => {
                fiber_genus = Some(rest.parse().map_err(|_| bad("fiber genus"))?)
            }
            "base_genus" => base_genus = Some(rest.parse().map_err(|_| bad("base genus"))?),
            "atlas" => {
                if atlas_obj.is_some() {
                    return Err(bad("single atlas declaration"));
                }
                atlas_obj = Some(atlas::load_atlas(rest)?);
            }
            "def" => {
                let (dname, word) = words::parse_def_line(line, lineno)?;
                defs.insert(dname, word);
            }
            "handle" => {
                let (a, b) = split_handle(rest, lineno)?;
                handles.push((words::parse_word(a)?, words::parse_word(b)?));
            }
            "singular" => {
                singulars.push(parse_singular(rest, lineno)?);
            }
            "section" => {
                let mut self_int: Option<i64> = None;
                let mut note = String::new();
                for field in rest.splitn(2, ' ') {
                    if let Some(v) = field.strip_prefix("self_intersection=") {
                        self_int = Some(v.parse().map_err(|_| bad("self-intersection"))?);
                    } else if let Some(v) = field.strip_prefix("note=") {
                        note = v.to_string();
                    }
                }
                section = Some(SectionData {
                    self_intersection: self_int.ok_or_else(|| bad("self_intersection="))?,
                    declared: note,
                });
            }
            _ => return Err(bad("fibration declaration keyword")),
        }
    }
    let h = fiber_genus.ok_or(Error::FibrationFile("missing fiber_genus".into()))?;
    let base_genus = base_genus.ok_or(Error::FibrationFile("missing base_genus".into()))?;
    let atlas_obj = atlas_obj.ok_or(Error::FibrationFile("missing atlas".into()))?;
    let atlas_stab = atlas_obj.stabilize(h, sign)?;
    Ok(Fibration {
        name: name.to_string(),
        h,
        base_genus,
        atlas: atlas_stab,
        defs,
        handles,
        singulars,
        section,
    })
}

/// Split a handle line `alpha , beta` at the top-level comma (commas
/// inside commutator brackets do not count).
fn split_handle(rest: &str, lineno: usize) -> Result<(&str, &str)> {
    let mut depth = 0i32;
    for (i, c) in rest.char_indices() {
        match c {
            '[' | '(' => depth += 1,
            ']' | ')' => depth -= 1,
            ',' if depth == 0 => return Ok((&rest[..i], &rest[i + 1..])),
            _ => {}
        }
    }
    Err(Error::Parse {
        line: lineno,
        column: 1,
        expected: "`,` separating the handle pair".into(),
    })
}

fn parse_singular(rest: &str, lineno: usize) -> Result<SingularDecl> {
    let bad = |what: &str| Error::Parse {
        line: lineno,
        column: 1,
        expected: what.to_string(),
    };
    // the twist letter ends where the key=value fields begin
    let mut split_at = rest.len();
    for (i, _) in rest.match_indices("type=") {
        if rest[..i].matches('(').count() == rest[..i].matches(')').count() {
            split_at = i;
            break;
        }
    }
    let letter = words::parse_word(&rest[..split_at])?;
    if !matches!(letter, Word::Twist { exp: 1, .. }) {
        return Err(bad("a single right-power twist letter t(...)"));
    }
    let mut declared_type: Option<usize> = None;
    let mut chirality = Chirality::Right;
    for field in rest[split_at..].split_whitespace() {
        if let Some(v) = field.strip_prefix("type=") {
            declared_type = Some(v.parse().map_err(|_| bad("type index"))?);
        } else if let Some(v) = field.strip_prefix("chirality=") {
            chirality = match v {
                "right" => Chirality::Right,
                "left" => Chirality::Left,
                _ => return Err(bad("chirality right|left")),
            };
        } else {
            return Err(bad("type=... or chirality=..."));
        }
    }
    Ok(SingularDecl {
        letter,
        declared_type: declared_type.ok_or_else(|| bad("type=<j>"))?,
        chirality,
    })
}

// ---------------------------------------------------------------------
// Shipped fibration files
// ---------------------------------------------------------------------

pub const PROP43_NONSEP: &str = include_str!("../data/prop43_nonsep.fib");
pub const PROP43_SEP: &str = include_str!("../data/prop43_sep.fib");
pub const PROP44: &str = include_str!("../data/prop44.fib");
pub const PROP45: &str = include_str!("../data/prop45.fib");
pub const PROP46_XPRIME: &str = include_str!("../data/prop46_xprime.fib");

pub const SHIPPED_FIBRATIONS: [(&str, &str); 5] = [
    ("prop43_nonsep", PROP43_NONSEP),
    ("prop43_sep", PROP43_SEP),
    ("prop44", PROP44),
    ("prop45", PROP45),
    ("prop46_xprime", PROP46_XPRIME),
];

/// Load one of the shipped example fibrations by name, optionally
/// stabilized to a larger fiber genus.
pub fn load_shipped(name: &str, h: Option<usize>, sign: TwistSign) -> Result<Fibration> {
    let src = SHIPPED_FIBRATIONS
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, s)| *s)
        .ok_or_else(|| Error::UnknownAtlas(name.to_string()))?;
    let mut parsed = parse_fibration(name, src, sign)?;
    if let Some(h_new) = h {
        if h_new < parsed.h {
            return Err(Error::GenusTooSmall {
                atlas: name.into(),
                requested: h_new,
                minimum: parsed.h,
            });
        }
        parsed.atlas = parsed.atlas.stabilize(h_new, sign)?;
        parsed.h = h_new;
    }
    Ok(parsed)
}
