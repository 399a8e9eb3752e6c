use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::cyclotomic::Cyclotomic;
use crate::error::{input, Result};
use crate::group::{Group, Subgroup};

/// A cyclotomic-valued function on conjugacy classes, indexed in the
/// group's canonical class order.
#[derive(Clone)]
pub struct ClassFunction {
    group: Arc<Group>,
    values: Vec<Cyclotomic>,
}

impl fmt::Debug for ClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vals: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", vals.join(", "))
    }
}

impl PartialEq for ClassFunction {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.group, &other.group) && self.values == other.values
    }
}

impl Eq for ClassFunction {}

fn rational(n: usize, d: usize) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl ClassFunction {
    pub fn new(group: &Arc<Group>, values: Vec<Cyclotomic>) -> Result<ClassFunction> {
        if values.len() != group.num_classes() {
            return input(format!(
                "class function has {} values but the group has {} classes",
                values.len(),
                group.num_classes()
            ));
        }
        Ok(ClassFunction {
            group: group.clone(),
            values,
        })
    }

    pub fn from_fn(group: &Arc<Group>, f: impl FnMut(usize) -> Cyclotomic) -> ClassFunction {
        ClassFunction {
            group: group.clone(),
            values: (0..group.num_classes()).map(f).collect(),
        }
    }

    pub fn zero(group: &Arc<Group>) -> ClassFunction {
        ClassFunction::from_fn(group, |_| Cyclotomic::zero())
    }

    pub fn trivial(group: &Arc<Group>) -> ClassFunction {
        ClassFunction::from_fn(group, |_| Cyclotomic::one())
    }

    /// `|G|` at the identity and 0 elsewhere.
    pub fn regular(group: &Arc<Group>) -> ClassFunction {
        let n = group.order() as i64;
        ClassFunction::from_fn(group, |k| Cyclotomic::from_integer(if k == 0 { n } else { 0 }))
    }

    /// 1 on class `k`, 0 elsewhere.
    pub fn class_indicator(group: &Arc<Group>, k: usize) -> ClassFunction {
        ClassFunction::from_fn(group, |j| Cyclotomic::from_integer((j == k) as i64))
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    /// Value on class `k`.
    pub fn value(&self, k: usize) -> &Cyclotomic {
        &self.values[k]
    }

    /// Value at the element with index `x`.
    pub fn at(&self, x: usize) -> &Cyclotomic {
        &self.values[self.group.class_of(x)]
    }

    /// Value at the identity.
    pub fn degree(&self) -> &Cyclotomic {
        &self.values[0]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }

    fn same_group(&self, other: &ClassFunction) -> Result<()> {
        if Arc::ptr_eq(&self.group, &other.group) {
            Ok(())
        } else {
            input("class functions live on different groups")
        }
    }

    fn zip(&self, other: &ClassFunction, f: impl Fn(&Cyclotomic, &Cyclotomic) -> Cyclotomic) -> Result<ClassFunction> {
        self.same_group(other)?;
        Ok(ClassFunction {
            group: self.group.clone(),
            values: self.values.iter().zip(&other.values).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn add(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.zip(other, |a, b| a - b)
    }

    pub fn product(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.zip(other, |a, b| a * b)
    }

    pub fn scale(&self, q: &BigRational) -> ClassFunction {
        ClassFunction {
            group: self.group.clone(),
            values: self.values.iter().map(|v| v.scale(q)).collect(),
        }
    }

    pub fn scale_by(&self, c: &Cyclotomic) -> ClassFunction {
        ClassFunction {
            group: self.group.clone(),
            values: self.values.iter().map(|v| v * c).collect(),
        }
    }

    /// Complex conjugate.
    pub fn conjugate(&self) -> ClassFunction {
        ClassFunction {
            group: self.group.clone(),
            values: self.values.iter().map(|v| v.conj()).collect(),
        }
    }

    /// `⟨f₁, f₂⟩ = (1/|G|) Σ_σ f₁(σ) conj(f₂(σ))`.
    pub fn inner_product(&self, other: &ClassFunction) -> Result<Cyclotomic> {
        self.same_group(other)?;
        let g = &self.group;
        let sum: Cyclotomic = g
            .classes()
            .iter()
            .zip(self.values.iter().zip(&other.values))
            .filter(|(_, (a, b))| !a.is_zero() && !b.is_zero())
            .map(|(c, (a, b))| (a * &b.conj()).scale(&rational(c.size, 1)))
            .sum();
        Ok(sum.scale(&rational(1, g.order())))
    }

    /// Restriction to a subgroup, as a class function on the subgroup's own
    /// enumeration.
    pub fn restrict(&self, h: &Subgroup) -> Result<ClassFunction> {
        if !Arc::ptr_eq(&self.group, h.parent()) {
            return input("restriction to a subgroup of a different group");
        }
        let emb = h.embedding()?;
        let values = emb
            .group
            .classes()
            .iter()
            .map(|c| self.at(emb.to_parent[c.representative]).clone())
            .collect();
        Ok(ClassFunction {
            group: emb.group.clone(),
            values,
        })
    }

    /// `Ind_H^G ψ` for a class function `ψ` on `H`'s own enumeration.
    pub fn induce(h: &Subgroup, psi: &ClassFunction) -> Result<ClassFunction> {
        let emb = h.embedding()?;
        if !Arc::ptr_eq(&emb.group, &psi.group) {
            return input("induced function is not defined on the given subgroup");
        }
        let g = h.parent();
        let mut acc = vec![Cyclotomic::zero(); g.num_classes()];
        for (c, v) in emb.group.classes().iter().zip(&psi.values) {
            if v.is_zero() {
                continue;
            }
            let k = g.class_of(emb.to_parent[c.representative]);
            acc[k] = &acc[k] + &v.scale(&rational(c.size, 1));
        }
        let values = acc
            .into_iter()
            .zip(g.classes())
            .map(|(v, c)| v.scale(&rational(g.order(), h.order() * c.size)))
            .collect();
        Ok(ClassFunction {
            group: g.clone(),
            values,
        })
    }

    /// Pushforward to `G/N`: the class function `x̄ ↦ Σ_{y ∈ xN} f(y) / |N|`
    /// evaluated on the parent's classes. Zero exactly when `f` has vanishing
    /// image in the quotient.
    pub fn pushforward_average(&self, n: &Subgroup) -> Result<ClassFunction> {
        if !Arc::ptr_eq(&self.group, n.parent()) {
            return input("normal subgroup of a different group");
        }
        let g = &self.group;
        let values = g
            .classes()
            .iter()
            .map(|c| {
                let x = c.representative;
                let s: Cyclotomic = n.members().iter().map(|&m| self.at(g.mul(x, m)).clone()).sum();
                s.scale(&rational(1, n.order()))
            })
            .collect();
        Ok(ClassFunction {
            group: g.clone(),
            values,
        })
    }

    /// Values as `cyclo(e; …)` strings.
    pub fn to_text(&self) -> Vec<String> {
        self.values.iter().map(|v| v.to_text()).collect()
    }

    /// Whether every value is rational.
    pub fn is_rational(&self) -> bool {
        self.values.iter().all(|v| v.is_rational())
    }

    /// Every value moved to its smallest conductor.
    pub fn canonicalized(&self) -> ClassFunction {
        ClassFunction {
            group: self.group.clone(),
            values: self.values.iter().map(|v| v.canonical()).collect(),
        }
    }

    /// `Σ qᵢ fᵢ` for functions on one group.
    pub fn linear_combination(group: &Arc<Group>, terms: &[(BigRational, &ClassFunction)]) -> Result<ClassFunction> {
        let mut acc = ClassFunction::zero(group);
        for (q, f) in terms {
            if q.is_zero() {
                continue;
            }
            acc = acc.add(&f.scale(q))?;
        }
        Ok(acc)
    }
}
