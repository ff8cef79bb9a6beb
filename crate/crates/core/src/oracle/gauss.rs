//! Gauss rules from the Jacobi matrix (Golub–Welsch), cached per family.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use nalgebra::{DMatrix, SymmetricEigen};

use super::poly::Family;
use crate::error::{Error, Result};

/// Nodes and weights normalized so that the weights sum to one; the total
/// weight is kept separately as `log_mu0`.
#[derive(Debug, Clone)]
pub struct GaussRule {
    pub family: Family,
    pub nodes: Vec<f64>,
    pub log_weights: Vec<f64>,
    pub log_mu0: f64,
}

impl GaussRule {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// `Σ w_i f(x_i)` against the probability weight.
    pub fn normalized_sum(&self, f: impl Fn(f64) -> f64) -> f64 {
        let mut acc = crate::specfun::CompensatedSum::new();
        for (x, lw) in self.nodes.iter().zip(&self.log_weights) {
            acc.add(lw.exp() * f(*x), 0.0);
        }
        acc.value()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Key {
    Laguerre(u64, usize),
    Jacobi(u64, u64, usize),
}

fn key(family: Family, n: usize) -> Key {
    match family {
        Family::Laguerre { lambda } => Key::Laguerre(lambda.to_bits(), n),
        Family::Jacobi { a, b } => Key::Jacobi(a.to_bits(), b.to_bits(), n),
    }
}

type Cache = RwLock<HashMap<Key, Arc<GaussRule>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Cached `n`-point Gauss rule for the family.
pub fn gauss_rule(family: Family, n: usize) -> Result<Arc<GaussRule>> {
    family.validate()?;
    if n == 0 {
        return Err(Error::QuadratureFailure("a Gauss rule needs at least one node".into()));
    }
    let k = key(family, n);
    if let Some(rule) = cache().read().expect("rule cache poisoned").get(&k) {
        return Ok(Arc::clone(rule));
    }
    let rule = Arc::new(compute_rule(family, n)?);
    let mut map = cache().write().expect("rule cache poisoned");
    Ok(Arc::clone(map.entry(k).or_insert(rule)))
}

fn compute_rule(family: Family, n: usize) -> Result<GaussRule> {
    let mut t = DMatrix::<f64>::zeros(n, n);
    for j in 0..n {
        t[(j, j)] = family.diag(j);
        if j + 1 < n {
            let b = family.off(j + 1);
            t[(j, j + 1)] = b;
            t[(j + 1, j)] = b;
        }
    }
    let eig = SymmetricEigen::new(t);
    let mut nodes: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    nodes.sort_by(|a, b| a.partial_cmp(b).expect("finite eigenvalues"));

    // Newton polishing on P_n, with steps limited to a fraction of the local gap.
    for i in 0..n {
        let gap = neighbour_gap(&nodes, i);
        let mut x = nodes[i];
        for _ in 0..4 {
            let step = family.newton_ratio(n, x);
            if !step.is_finite() || step.abs() > 0.1 * gap {
                break;
            }
            x -= step;
            if step.abs() <= 1e-16 * x.abs().max(1e-300) {
                break;
            }
        }
        nodes[i] = x;
    }

    let log_weights: Vec<f64> = nodes.iter().map(|&x| -family.log_christoffel_sum(n, x)).collect();
    if nodes.iter().chain(&log_weights).any(|v| !v.is_finite()) {
        return Err(Error::QuadratureFailure(format!("non-finite Gauss rule for {family:?} with {n} nodes")));
    }
    // Renormalize so the weights sum to one exactly in floating point.
    let max = log_weights.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let total: f64 = log_weights.iter().map(|lw| (lw - max).exp()).sum();
    let shift = max + total.ln();
    let log_weights = log_weights.into_iter().map(|lw| lw - shift).collect();

    Ok(GaussRule {
        family,
        nodes,
        log_weights,
        log_mu0: family.log_mu0(),
    })
}

fn neighbour_gap(nodes: &[f64], i: usize) -> f64 {
    let left = if i > 0 { nodes[i] - nodes[i - 1] } else { f64::INFINITY };
    let right = if i + 1 < nodes.len() { nodes[i + 1] - nodes[i] } else { f64::INFINITY };
    let g = left.min(right);
    if g.is_finite() {
        g
    } else {
        nodes[i].abs().max(1.0)
    }
}
