use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;
use std::sync::Arc;

use crate::ff::{Field, FieldElement};

/// Exponent vector `(e_1, ..., e_m)` of the monomial `x_1^e_1 ... x_m^e_m`.
pub type Exponent = Vec<usize>;

/// Monomial orders with variable precedence `x_1 > x_2 > ... > x_m`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Default)]
pub enum MonomialOrder {
    Lex,
    #[default]
    Grlex,
}

impl MonomialOrder {
    pub fn cmp(self, a: &[usize], b: &[usize]) -> Ordering {
        match self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::Grlex => {
                let da: usize = a.iter().sum();
                let db: usize = b.iter().sum();
                da.cmp(&db).then_with(|| a.cmp(b))
            }
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            MonomialOrder::Lex => "lex",
            MonomialOrder::Grlex => "grlex",
        }
    }
}

impl FromStr for MonomialOrder {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "lex" => Ok(MonomialOrder::Lex),
            "grlex" => Ok(MonomialOrder::Grlex),
            other => Err(format!("unknown monomial order `{other}`")),
        }
    }
}

/// Sparse multivariate polynomial over a finite field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    field: Arc<Field>,
    nvars: usize,
    terms: BTreeMap<Exponent, FieldElement>,
}

impl Polynomial {
    pub fn zero(field: Arc<Field>, nvars: usize) -> Self {
        Polynomial {
            field,
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(field: Arc<Field>, nvars: usize, c: FieldElement) -> Self {
        Self::from_terms(field, nvars, vec![(vec![0; nvars], c)])
    }

    pub fn monomial(field: Arc<Field>, exp: Exponent) -> Self {
        let nvars = exp.len();
        Self::from_terms(field, nvars, vec![(exp, FieldElement::ONE)])
    }

    /// Sums like terms and drops zero coefficients.
    pub fn from_terms(
        field: Arc<Field>,
        nvars: usize,
        terms: Vec<(Exponent, FieldElement)>,
    ) -> Self {
        let mut map: BTreeMap<Exponent, FieldElement> = BTreeMap::new();
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent length must match variable count");
            let slot = map.entry(e).or_insert(FieldElement::ZERO);
            *slot = field.add(*slot, c);
        }
        map.retain(|_, c| !c.is_zero());
        Polynomial {
            field,
            nvars,
            terms: map,
        }
    }

    /// Univariate polynomial from coefficients, lowest degree first.
    pub fn univariate(field: Arc<Field>, coeffs: &[FieldElement]) -> Self {
        let terms = coeffs
            .iter()
            .enumerate()
            .map(|(i, &c)| (vec![i], c))
            .collect();
        Self::from_terms(field, 1, terms)
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, FieldElement)> {
        self.terms.iter().map(|(e, &c)| (e, c))
    }

    pub fn support(&self) -> impl Iterator<Item = &Exponent> {
        self.terms.keys()
    }

    pub fn coeff(&self, e: &[usize]) -> FieldElement {
        self.terms.get(e).copied().unwrap_or(FieldElement::ZERO)
    }

    /// Leading exponent under `order`.
    pub fn lead(&self, order: MonomialOrder) -> Option<&Exponent> {
        self.terms.keys().max_by(|a, b| order.cmp(a, b))
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let terms = self
            .terms()
            .chain(other.terms())
            .map(|(e, c)| (e.clone(), c))
            .collect();
        Self::from_terms(self.field.clone(), self.nvars, terms)
    }

    pub fn scale(&self, c: FieldElement) -> Polynomial {
        let terms = self
            .terms()
            .map(|(e, a)| (e.clone(), self.field.mul(a, c)))
            .collect();
        Self::from_terms(self.field.clone(), self.nvars, terms)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.scale(self.field.neg(FieldElement::ONE)))
    }

    pub fn mul_monomial(&self, shift: &[usize]) -> Polynomial {
        let terms = self
            .terms()
            .map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c))
            .collect();
        Self::from_terms(self.field.clone(), self.nvars, terms)
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                terms.push((e, self.field.mul(c1, c2)));
            }
        }
        Self::from_terms(self.field.clone(), self.nvars, terms)
    }

    /// Terms sorted by decreasing monomial under `order`.
    pub fn sorted_terms(&self, order: MonomialOrder) -> Vec<(&Exponent, FieldElement)> {
        let mut v: Vec<_> = self.terms().collect();
        v.sort_by(|a, b| order.cmp(b.0, a.0));
        v
    }

    /// Renders e.g. `x1^2*x2 + 2*x2 + 1`; univariate polynomials use `x`.
    pub fn display(&self, order: MonomialOrder) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (e, c)) in self.sorted_terms(order).into_iter().enumerate() {
            if k > 0 {
                out.push_str(" + ");
            }
            let mono = self.monomial_string(e);
            match (c.0, mono.is_empty()) {
                (_, true) => write!(out, "{}", c.0).unwrap(),
                (1, false) => out.push_str(&mono),
                (_, false) => write!(out, "{}*{}", c.0, mono).unwrap(),
            }
        }
        out
    }

    fn monomial_string(&self, e: &[usize]) -> String {
        let mut parts = Vec::new();
        for (i, &d) in e.iter().enumerate() {
            if d == 0 {
                continue;
            }
            let var = if self.nvars == 1 {
                "x".to_string()
            } else {
                format!("x{}", i + 1)
            };
            parts.push(if d == 1 { var } else { format!("{var}^{d}") });
        }
        parts.join("*")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn display_form() {
        let f = Arc::new(Field::prime(3).unwrap());
        let p = Polynomial::from_terms(
            f,
            2,
            vec![
                (vec![2, 1], FieldElement(1)),
                (vec![0, 1], FieldElement(2)),
                (vec![0, 0], FieldElement(1)),
            ],
        );
        assert_eq!(p.display(MonomialOrder::Grlex), "x1^2*x2 + 2*x2 + 1");
    }

    #[test]
    fn like_terms_cancel() {
        let f = Arc::new(Field::prime(2).unwrap());
        let p = Polynomial::monomial(f.clone(), vec![1, 2]);
        assert!(p.add(&p).is_zero());
        assert!(p.sub(&p).is_zero());
    }

    #[test]
    fn lead_depends_on_order() {
        let f = Arc::new(Field::prime(2).unwrap());
        let p = Polynomial::from_terms(
            f,
            2,
            vec![(vec![1, 0], FieldElement(1)), (vec![0, 2], FieldElement(1))],
        );
        assert_eq!(p.lead(MonomialOrder::Lex), Some(&vec![1, 0]));
        assert_eq!(p.lead(MonomialOrder::Grlex), Some(&vec![0, 2]));
    }

    proptest! {
        #[test]
        fn orders_are_total_and_multiplicative(
            a in prop::collection::vec(0usize..6, 3),
            b in prop::collection::vec(0usize..6, 3),
            c in prop::collection::vec(0usize..6, 3),
        ) {
            for order in [MonomialOrder::Lex, MonomialOrder::Grlex] {
                let ab = order.cmp(&a, &b);
                prop_assert_eq!(ab, order.cmp(&b, &a).reverse());
                prop_assert_eq!(ab == Ordering::Equal, a == b);
                let ac: Vec<usize> = a.iter().zip(&c).map(|(x, y)| x + y).collect();
                let bc: Vec<usize> = b.iter().zip(&c).map(|(x, y)| x + y).collect();
                prop_assert_eq!(order.cmp(&ac, &bc), ab);
                prop_assert_ne!(order.cmp(&[0, 0, 0], &a), Ordering::Greater);
            }
        }
    }
}
