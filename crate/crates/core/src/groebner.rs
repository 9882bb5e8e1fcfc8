//! Buchberger's algorithm specialised to pure-difference binomials.
//!
//! Every polynomial handled here is `u − v` for monomials `u`, `v`. Reducing
//! the lead of such a binomial by another one rewrites a single monomial, and
//! an S-polynomial of two binomials is again a binomial, so no coefficient
//! field is needed. Reduction of `u − v` is carried out by reducing `u` and
//! `v` to normal form independently: `u − NF(u)` lies in the ideal, so the
//! residual `NF(u) − NF(v)` is congruent to the input and fully reduced.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::collections::HashMap;

use thiserror::Error;

use crate::monomial::{Binomial, Monomial};
use crate::order::MonomialOrder;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("binomial is zero")]
    ZeroBinomial,
}

/// `lead − tail` with `lead > tail` under the order it was built for.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct OrientedBinomial {
    pub lead: Monomial,
    pub tail: Monomial,
}

impl OrientedBinomial {
    pub fn degree(&self) -> u32 {
        self.lead.degree()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.lead.degree() == self.tail.degree()
    }

    pub fn to_binomial(&self) -> Binomial {
        Binomial::new(self.lead.clone(), self.tail.clone())
    }

    pub fn render(&self, order: &MonomialOrder, names: &[String]) -> String {
        format!(
            "{} - {}",
            order.render_monomial(&self.lead, names),
            order.render_monomial(&self.tail, names)
        )
    }
}

pub fn orient(b: &Binomial, order: &MonomialOrder) -> Result<OrientedBinomial, GroebnerError> {
    match order.cmp(&b.lhs, &b.rhs) {
        Ordering::Greater => Ok(OrientedBinomial {
            lead: b.lhs.clone(),
            tail: b.rhs.clone(),
        }),
        Ordering::Less => Ok(OrientedBinomial {
            lead: b.rhs.clone(),
            tail: b.lhs.clone(),
        }),
        Ordering::Equal => Err(GroebnerError::ZeroBinomial),
    }
}

/// One term `coefficient · multiplier · basis[index]` of a certificate.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CertificateStep {
    pub multiplier: Monomial,
    pub index: usize,
    pub coefficient: i64,
}

/// A linear combination `Σ cᵢ·mᵢ·gᵢ` over some list of binomials `gᵢ`.
/// Terms with equal multiplier and index are merged.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Certificate {
    terms: BTreeMap<(usize, Vec<u32>), i64>,
}

impl Certificate {
    pub fn single(index: usize) -> Self {
        let mut c = Certificate::default();
        c.add(Monomial::one(), index, 1);
        c
    }

    fn add(&mut self, multiplier: Monomial, index: usize, coefficient: i64) {
        let key = (index, multiplier.exponents().to_vec());
        let entry = self.terms.entry(key.clone()).or_insert(0);
        *entry += coefficient;
        if *entry == 0 {
            self.terms.remove(&key);
        }
    }

    fn add_scaled(&mut self, other: &Certificate, multiplier: &Monomial, sign: i64) {
        for ((index, exps), &c) in &other.terms {
            let m = Monomial::from_exponents(exps.clone()) * multiplier;
            self.add(m, *index, sign * c);
        }
    }

    pub fn steps(&self) -> Vec<CertificateStep> {
        self.terms
            .iter()
            .map(|((index, exps), &coefficient)| CertificateStep {
                multiplier: Monomial::from_exponents(exps.clone()),
                index: *index,
                coefficient,
            })
            .collect()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Rewrites a certificate over `basis` into one over the binomials those
    /// basis elements are certified against.
    pub fn compose(&self, basis_certificates: &[Certificate]) -> Certificate {
        let mut out = Certificate::default();
        for ((index, exps), &c) in &self.terms {
            out.add_scaled(&basis_certificates[*index], &Monomial::from_exponents(exps.clone()), c);
        }
        out
    }

    /// Expands the combination as a polynomial with integer coefficients.
    pub fn expand(&self, basis: &[Binomial]) -> Polynomial {
        let mut p = Polynomial::default();
        for ((index, exps), &c) in &self.terms {
            let m = Monomial::from_exponents(exps.clone());
            let g = &basis[*index];
            p.add_term(&m * &g.lhs, c);
            p.add_term(&m * &g.rhs, -c);
        }
        p
    }

    /// Whether the expansion equals `target.lhs − target.rhs` exactly.
    pub fn proves(&self, basis: &[Binomial], target: &Binomial) -> bool {
        self.expand(basis) == Polynomial::from_binomial(target)
    }
}

/// Sparse polynomial with integer coefficients, used to replay certificates.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Polynomial {
    terms: HashMap<Monomial, i64>,
}

impl Polynomial {
    pub fn from_binomial(b: &Binomial) -> Self {
        let mut p = Polynomial::default();
        p.add_term(b.lhs.clone(), 1);
        p.add_term(b.rhs.clone(), -1);
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: i64) {
        let entry = self.terms.entry(m.clone()).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> i64 {
        self.terms.get(m).copied().unwrap_or(0)
    }
}

/// Rewrites `m` by the basis leads until no lead divides it. Returns the
/// normal form and, if `record`, the certificate for `m − NF(m)` over `basis`.
fn reduce_monomial(
    mut m: Monomial,
    basis: &[OrientedBinomial],
    record: bool,
) -> (Monomial, Option<Certificate>) {
    let mut cert = record.then(Certificate::default);
    'outer: loop {
        for (i, g) in basis.iter().enumerate() {
            if let Some(q) = m.checked_div(&g.lead) {
                m = &q * &g.tail;
                if let Some(c) = cert.as_mut() {
                    c.add(q, i, 1);
                }
                continue 'outer;
            }
        }
        return (m, cert);
    }
}

/// Result of [`normal_form`].
#[derive(Clone, Debug)]
pub struct NormalForm {
    /// The fully reduced residual, `None` when it vanishes.
    pub residual: Option<OrientedBinomial>,
    /// `NF(b.lhs) − NF(b.rhs)`, before orientation.
    pub reduced: Binomial,
    /// Certificate over the basis for `b − reduced`, when requested. For a
    /// vanishing residual this is a membership certificate for `b`.
    pub certificate: Option<Certificate>,
}

impl NormalForm {
    pub fn is_zero(&self) -> bool {
        self.residual.is_none()
    }
}

/// Reduces `b` modulo `basis` (oriented under `order`).
pub fn normal_form(
    b: &Binomial,
    basis: &[OrientedBinomial],
    order: &MonomialOrder,
    with_certificate: bool,
) -> NormalForm {
    let (u, cu) = reduce_monomial(b.lhs.clone(), basis, with_certificate);
    let (v, cv) = reduce_monomial(b.rhs.clone(), basis, with_certificate);
    let certificate = cu.map(|mut c| {
        c.add_scaled(&cv.unwrap(), &Monomial::one(), -1);
        c
    });
    let reduced = Binomial::new(u, v);
    let residual = orient(&reduced, order).ok();
    NormalForm {
        residual,
        reduced,
        certificate,
    }
}

/// `lcm/lead(f) · f − lcm/lead(g) · g`, or `None` when it vanishes.
pub fn s_binomial(f: &OrientedBinomial, g: &OrientedBinomial) -> Option<Binomial> {
    let l = f.lead.lcm(&g.lead);
    let mf = l.checked_div(&f.lead).unwrap();
    let mg = l.checked_div(&g.lead).unwrap();
    let b = Binomial::new(&mg * &g.tail, &mf * &f.tail);
    (!b.is_zero()).then_some(b)
}

/// Order in which critical pairs are processed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PairStrategy {
    /// Smallest lcm degree first, ties by age.
    #[default]
    Normal,
    /// Oldest pair first.
    Fifo,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct GroebnerOptions {
    pub strategy: PairStrategy,
    /// Track, for every basis element, a certificate over the input generators.
    pub certificates: bool,
}

/// The reduced Gröbner basis of a binomial ideal under a fixed order.
#[derive(Clone, Debug)]
pub struct ReducedGroebnerBasis {
    order: MonomialOrder,
    elements: Vec<OrientedBinomial>,
    generators: Vec<Binomial>,
    certificates: Option<Vec<Certificate>>,
}

impl PartialEq for ReducedGroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.elements == other.elements
    }
}

impl ReducedGroebnerBasis {
    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    /// Elements sorted by degree, then by lead under the order.
    pub fn elements(&self) -> &[OrientedBinomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn generators(&self) -> &[Binomial] {
        &self.generators
    }

    /// Certificates of the elements over [`ReducedGroebnerBasis::generators`],
    /// present when requested through [`GroebnerOptions::certificates`].
    pub fn certificates(&self) -> Option<&[Certificate]> {
        self.certificates.as_deref()
    }

    pub fn max_degree(&self) -> u32 {
        self.elements.iter().map(OrientedBinomial::degree).max().unwrap_or(0)
    }

    pub fn is_quadratic(&self) -> bool {
        self.elements.iter().all(|g| g.degree() == 2 && g.tail.degree() == 2)
    }

    pub fn initial_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::from_generators(self.elements.iter().map(|g| g.lead.clone()).collect())
    }

    pub fn normal_form(&self, b: &Binomial, with_certificate: bool) -> NormalForm {
        normal_form(b, &self.elements, &self.order, with_certificate)
    }

    pub fn contains(&self, b: &Binomial) -> bool {
        b.is_zero() || self.normal_form(b, false).is_zero()
    }

    /// A certificate for `b` over the input generators, if `b` is in the ideal
    /// and certificates were tracked.
    pub fn membership_certificate(&self, b: &Binomial) -> Option<Certificate> {
        let basis_certs = self.certificates.as_ref()?;
        let nf = self.normal_form(b, true);
        if !nf.is_zero() {
            return None;
        }
        Some(nf.certificate.unwrap().compose(basis_certs))
    }

    /// Whether `b` equals some element up to sign.
    pub fn contains_element(&self, b: &Binomial) -> bool {
        self.elements.iter().any(|g| g.to_binomial().same_up_to_sign(b))
    }

    pub fn render(&self, names: &[String]) -> Vec<String> {
        self.elements.iter().map(|g| g.render(&self.order, names)).collect()
    }
}

struct Working {
    elem: OrientedBinomial,
    cert: Option<Certificate>,
}

fn push(
    w: Working,
    basis: &mut Vec<Working>,
    leads: &mut Vec<OrientedBinomial>,
    pairs: &mut Vec<(usize, usize)>,
) {
    let k = basis.len();
    pairs.extend((0..k).map(|i| (i, k)));
    leads.push(w.elem.clone());
    basis.push(w);
}

/// Reduced Gröbner basis with the default (normal) pair strategy.
pub fn buchberger(generators: &[Binomial], order: &MonomialOrder) -> ReducedGroebnerBasis {
    buchberger_with(generators, order, GroebnerOptions::default())
}

pub fn buchberger_with(
    generators: &[Binomial],
    order: &MonomialOrder,
    options: GroebnerOptions,
) -> ReducedGroebnerBasis {
    let track = options.certificates;
    let mut basis: Vec<Working> = Vec::new();
    let mut leads: Vec<OrientedBinomial> = Vec::new();
    let mut pairs: Vec<(usize, usize)> = Vec::new();


    for (i, g) in generators.iter().enumerate() {
        if let Ok(elem) = orient(g, order) {
            let mut cert = track.then(|| Certificate::single(i));
            if elem.lead != g.lhs {
                cert = cert.map(|c| {
                    let mut neg = Certificate::default();
                    neg.add_scaled(&c, &Monomial::one(), -1);
                    neg
                });
            }
            push(Working { elem, cert }, &mut basis, &mut leads, &mut pairs);
        }
    }

    while !pairs.is_empty() {
        let pick = match options.strategy {
            PairStrategy::Fifo => 0,
            PairStrategy::Normal => {
                let mut best = 0;
                let mut best_deg = u32::MAX;
                for (k, &(i, j)) in pairs.iter().enumerate() {
                    let d = leads[i].lead.lcm(&leads[j].lead).degree();
                    if d < best_deg {
                        best = k;
                        best_deg = d;
                    }
                }
                best
            }
        };
        let (i, j) = pairs.remove(pick);
        let (f, g) = (&leads[i], &leads[j]);
        if f.lead.is_coprime(&g.lead) {
            continue;
        }
        let Some(s) = s_binomial(f, g) else { continue };
        let nf = normal_form(&s, &leads, order, track);
        let Some(elem) = nf.residual else { continue };
        let cert = if track {
            // s = (l/Lg)·g − (l/Lf)·f as lhs − rhs.
            let l = f.lead.lcm(&g.lead);
            let mf = l.checked_div(&f.lead).unwrap();
            let mg = l.checked_div(&g.lead).unwrap();
            let mut c = Certificate::default();
            c.add_scaled(basis[j].cert.as_ref().unwrap(), &mg, -1);
            c.add_scaled(basis[i].cert.as_ref().unwrap(), &mf, 1);
            let s_cert = c;
            // residual lhs − rhs = s − (s − residual)
            let certs: Vec<Certificate> = basis.iter().map(|w| w.cert.clone().unwrap()).collect();
            let mut r = s_cert;
            r.add_scaled(&nf.certificate.unwrap().compose(&certs), &Monomial::one(), -1);
            if nf.reduced.lhs != elem.lead {
                let mut neg = Certificate::default();
                neg.add_scaled(&r, &Monomial::one(), -1);
                r = neg;
            }
            Some(r)
        } else {
            None
        };
        push(Working { elem, cert }, &mut basis, &mut leads, &mut pairs);
    }

    interreduce(basis, generators, order, track)
}

fn interreduce(
    basis: Vec<Working>,
    generators: &[Binomial],
    order: &MonomialOrder,
    track: bool,
) -> ReducedGroebnerBasis {
    let n = basis.len();
    let mut keep = vec![true; n];
    for i in 0..n {
        for j in 0..n {
            if i != j
                && keep[j]
                && basis[j].elem.lead.divides(&basis[i].elem.lead)
                && (basis[j].elem.lead != basis[i].elem.lead || j < i)
            {
                keep[i] = false;
                break;
            }
        }
    }
    let minimal: Vec<Working> = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(w, k)| k.then_some(w))
        .collect();
    let leads: Vec<OrientedBinomial> = minimal.iter().map(|w| w.elem.clone()).collect();
    let certs: Option<Vec<Certificate>> =
        track.then(|| minimal.iter().map(|w| w.cert.clone().unwrap()).collect());

    let mut reduced: Vec<(OrientedBinomial, Option<Certificate>)> = minimal
        .iter()
        .map(|w| {
            let (tail, c) = reduce_monomial(w.elem.tail.clone(), &leads, track);
            let cert = c.map(|c| {
                // lead − NF(tail) = (lead − tail) + (tail − NF(tail))
                let mut r = w.cert.clone().unwrap();
                r.add_scaled(&c.compose(certs.as_ref().unwrap()), &Monomial::one(), 1);
                r
            });
            debug_assert!(order.greater(&w.elem.lead, &tail));
            (
                OrientedBinomial {
                    lead: w.elem.lead.clone(),
                    tail,
                },
                cert,
            )
        })
        .collect();
    reduced.sort_by(|(a, _), (b, _)| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| order.cmp(&a.lead, &b.lead))
    });
    let (elements, certificates): (Vec<_>, Vec<_>) = reduced.into_iter().unzip();
    ReducedGroebnerBasis {
        order: order.clone(),
        elements,
        generators: generators.to_vec(),
        certificates: track.then(|| certificates.into_iter().map(Option::unwrap).collect()),
    }
}

/// A monomial ideal by its minimal generators.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct MonomialIdeal {
    min_gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Keeps the divisibility-minimal generators, in input order.
    pub fn from_generators(gens: Vec<Monomial>) -> Self {
        let mut min_gens: Vec<Monomial> = Vec::new();
        for (i, g) in gens.iter().enumerate() {
            let redundant = gens
                .iter()
                .enumerate()
                .any(|(j, h)| j != i && h.divides(g) && (h != g || j < i));
            if !redundant {
                min_gens.push(g.clone());
            }
        }
        MonomialIdeal { min_gens }
    }

    pub fn min_gens(&self) -> &[Monomial] {
        &self.min_gens
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.min_gens.iter().any(|g| g.divides(m))
    }

    pub fn is_squarefree(&self) -> bool {
        self.min_gens.iter().all(Monomial::is_squarefree)
    }

    pub fn contains_generator(&self, m: &Monomial) -> bool {
        self.min_gens.contains(m)
    }

    /// Number of monomials of each degree `0..=max_degree` in `num_vars`
    /// variables that lie outside the ideal.
    pub fn standard_monomial_counts(&self, num_vars: usize, max_degree: u32) -> Vec<u64> {
        let mut counts = vec![0u64; max_degree as usize + 1];
        let mut exps = vec![0u32; num_vars];
        self.count_rec(&mut exps, 0, 0, max_degree, &mut counts);
        counts
    }

    fn count_rec(&self, exps: &mut Vec<u32>, var: usize, degree: u32, max: u32, counts: &mut [u64]) {
        if var == exps.len() {
            if !self.contains(&Monomial::from_exponents(exps.clone())) {
                counts[degree as usize] += 1;
            }
            return;
        }
        for e in 0..=(max - degree) {
            exps[var] = e;
            self.count_rec(exps, var + 1, degree + e, max, counts);
        }
        exps[var] = 0;
    }
}
