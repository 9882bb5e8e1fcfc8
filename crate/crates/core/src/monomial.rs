//! Monomials and pure-difference binomials over indexed variables.

use std::ops::Mul;

/// A monomial as a dense exponent vector. Trailing zero exponents are never
/// stored, so two monomials are equal exactly when their exponents agree.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct Monomial {
    exps: Vec<u32>,
    degree: u32,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(v: usize) -> Self {
        let mut exps = vec![0; v + 1];
        exps[v] = 1;
        Monomial { exps, degree: 1 }
    }

    pub fn from_exponents(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    /// Product of the given variables, with repetition.
    pub fn from_vars(vars: &[usize]) -> Self {
        let len = vars.iter().map(|&v| v + 1).max().unwrap_or(0);
        let mut exps = vec![0; len];
        for &v in vars {
            exps[v] += 1;
        }
        Monomial::from_exponents(exps)
    }

    #[inline]
    pub fn exponent(&self, v: usize) -> u32 {
        self.exps.get(v).copied().unwrap_or(0)
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// One past the largest variable index with a nonzero exponent.
    pub fn span(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// `(variable, exponent)` pairs with nonzero exponent, by variable index.
    pub fn support(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(v, &e)| (v, e))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree
            && self.exps.len() <= other.exps.len()
            && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / other`, if `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let exps = self
            .exps
            .iter()
            .enumerate()
            .map(|(v, &e)| e - other.exponent(v))
            .collect();
        Some(Monomial::from_exponents(exps))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let len = self.exps.len().max(other.exps.len());
        Monomial::from_exponents(
            (0..len)
                .map(|v| self.exponent(v).max(other.exponent(v)))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Variables with a nonzero exponent satisfy `keep`.
    pub fn uses_only(&self, keep: impl Fn(usize) -> bool) -> bool {
        self.support().all(|(v, _)| keep(v))
    }

    /// Renames variables through `map` (old index -> new index).
    pub fn substitute(&self, map: &[usize]) -> Monomial {
        let mut vars = Vec::with_capacity(self.degree as usize);
        for (v, e) in self.support() {
            vars.extend(std::iter::repeat_n(map[v], e as usize));
        }
        Monomial::from_vars(&vars)
    }
}

impl Mul<&Monomial> for &Monomial {
    type Output = Monomial;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &Monomial) -> Monomial {
        let len = self.exps.len().max(rhs.exps.len());
        let exps = (0..len).map(|v| self.exponent(v) + rhs.exponent(v)).collect();
        Monomial {
            exps,
            degree: self.degree + rhs.degree,
        }
    }
}

impl Mul<&Monomial> for Monomial {
    type Output = Monomial;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &Monomial) -> Monomial {
        &self * rhs
    }
}

/// `lhs − rhs` with unit coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Binomial {
    pub lhs: Monomial,
    pub rhs: Monomial,
}

impl Binomial {
    pub fn new(lhs: Monomial, rhs: Monomial) -> Self {
        Binomial { lhs, rhs }
    }

    pub fn is_zero(&self) -> bool {
        self.lhs == self.rhs
    }

    pub fn is_homogeneous(&self) -> bool {
        self.lhs.degree() == self.rhs.degree()
    }

    pub fn negated(&self) -> Binomial {
        Binomial::new(self.rhs.clone(), self.lhs.clone())
    }

    /// Equal up to sign.
    pub fn same_up_to_sign(&self, other: &Binomial) -> bool {
        (self.lhs == other.lhs && self.rhs == other.rhs)
            || (self.lhs == other.rhs && self.rhs == other.lhs)
    }

    pub fn is_squarefree(&self) -> bool {
        self.lhs.is_squarefree() && self.rhs.is_squarefree()
    }

    /// Sides ordered so that the comparison is independent of sign.
    pub fn unsigned_key(&self) -> (Vec<u32>, Vec<u32>) {
        let (a, b) = (self.lhs.exponents().to_vec(), self.rhs.exponents().to_vec());
        if a <= b {
            (a, b)
        } else {
            (b, a)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn trailing_zeros_are_trimmed() {
        let a = Monomial::from_exponents(vec![1, 0, 2, 0, 0]);
        let b = Monomial::from_exponents(vec![1, 0, 2]);
        assert_eq!(a, b);
        assert_eq!(a.degree(), 3);
        assert_eq!(Monomial::from_exponents(vec![0, 0]), Monomial::one());
    }

    #[test]
    fn division_and_lcm() {
        let ad2e = Monomial::from_vars(&[0, 3, 3, 4]);
        let de = Monomial::from_vars(&[3, 4]);
        assert!(de.divides(&ad2e));
        assert_eq!(ad2e.checked_div(&de), Some(Monomial::from_vars(&[0, 3])));
        assert_eq!(de.checked_div(&ad2e), None);
        let bd = Monomial::from_vars(&[1, 3]);
        let cd = Monomial::from_vars(&[2, 3]);
        assert_eq!(bd.lcm(&cd), Monomial::from_vars(&[1, 2, 3]));
        assert!(!bd.is_coprime(&cd));
        assert!(Monomial::from_vars(&[0, 4]).is_coprime(&bd));
        assert!(!ad2e.is_squarefree());
    }

    fn monomial() -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u32..4, 0..6).prop_map(Monomial::from_exponents)
    }

    proptest! {
        #[test]
        fn product_divided_by_factor(a in monomial(), b in monomial()) {
            let p = &a * &b;
            prop_assert_eq!(p.degree(), a.degree() + b.degree());
            prop_assert_eq!(p.checked_div(&a), Some(b.clone()));
            let l = a.lcm(&b);
            prop_assert!(a.divides(&l) && b.divides(&l));
            prop_assert!(l.divides(&p));
        }
    }
}
