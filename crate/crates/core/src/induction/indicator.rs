use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use super::monomial::Workspace;
use crate::chartab::ClassFunction;
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};

/// Slack allowed above 1 in the certified ℓ¹ bound.
pub const L1_SLACK: f64 = 1e-12;

/// Decimal digits of the enclosures used for `|aᵢ|`.
const PRECISION: u32 = 30;

#[derive(Clone, Debug)]
pub struct IndicatorDecomposition {
    pub class: usize,
    pub coefficients: Vec<Cyclotomic>,
    /// Certified upper bound for `Σ|aᵢ|`.
    pub l1_upper: BigRational,
    /// `Σ aᵢ χᵢ` equals the indicator of the class.
    pub reproduces: bool,
}

impl IndicatorDecomposition {
    pub fn within_one(&self) -> bool {
        let slack = BigRational::from_float(L1_SLACK).expect("finite");
        self.l1_upper <= BigRational::from_integer(BigInt::from(1)) + slack
    }

    pub fn report(&self) -> IndicatorReport {
        IndicatorReport {
            class: self.class,
            coefficients: self.coefficients.iter().map(|c| c.to_text()).collect(),
            l1_upper: num_traits::ToPrimitive::to_f64(&self.l1_upper).unwrap_or(f64::INFINITY),
            reproduces: self.reproduces,
            within_one: self.within_one(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IndicatorReport {
    pub class: usize,
    pub coefficients: Vec<String>,
    pub l1_upper: f64,
    pub reproduces: bool,
    pub within_one: bool,
}

/// `1_C = Σ aᵢ χᵢ` with `aᵢ = (|C|/|G|) · conj χᵢ(c)`.
pub fn class_indicator_decomposition(ws: &Workspace, class: usize) -> Result<IndicatorDecomposition> {
    let g = ws.group();
    if class >= g.num_classes() {
        return Err(Error::Input(format!("class index {class} out of range (0..{})", g.num_classes())));
    }
    let t = ws.table();
    let weight = BigRational::new(BigInt::from(g.classes()[class].size), BigInt::from(g.order()));
    let coefficients: Vec<Cyclotomic> = t
        .irreducibles()
        .iter()
        .map(|chi| chi.value(class).conj().scale(&weight))
        .collect();
    let mut sum = ClassFunction::zero(g);
    for (a, chi) in coefficients.iter().zip(t.irreducibles()) {
        sum = sum.add(&chi.scale_by(a))?;
    }
    let reproduces = sum == ClassFunction::class_indicator(g, class);
    let l1_upper = coefficients
        .iter()
        .fold(BigRational::zero(), |acc, a| acc + a.to_complex(PRECISION).abs_upper());
    Ok(IndicatorDecomposition {
        class,
        coefficients,
        l1_upper,
        reproduces,
    })
}
