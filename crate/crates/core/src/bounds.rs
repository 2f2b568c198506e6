//! Closed-form bounds and identities for θ, α and ω of Johnson graphs.
//!
//! Everything here is exact integer or rational arithmetic.

use num_rational::Ratio;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fixtures::{table_theta, ThetaValue};
use crate::graph::GraphParams;
use crate::subset::binomial;

pub type Rational = Ratio<i128>;

fn binom(n: u64, k: u64) -> Result<u128> {
    binomial(n, k).ok_or(Error::Overflow("binomial coefficient"))
}

/// ω(J(n, k)) = max(n - k + 1, k + 1).
pub fn clique_number(params: GraphParams) -> u64 {
    let (n, k) = (params.n() as u64, params.k() as u64);
    (n - k + 1).max(k + 1)
}

/// The `k`-th Catalan number `binomial(2k, k) / (k + 1)`.
pub fn catalan(k: u64) -> Result<u64> {
    // C(2k, k) overflows u128 long after C_k overflows u64
    let c = binom(2 * k, k)? / (k as u128 + 1);
    u64::try_from(c).map_err(|_| Error::Overflow("Catalan number"))
}

/// `ceil(binomial(n, k) / ω)`: every clique has at most ω vertices.
pub fn simple_lower_bound(params: GraphParams) -> u64 {
    params.vertex_count().div_ceil(clique_number(params))
}

/// `binomial(n - 2, k - 1)`, the size of the recursive construction.
pub fn recursive_upper_bound(params: GraphParams) -> u64 {
    crate::subset::binom64(params.n() - 2, params.k() - 1)
}

/// Goodman's lower bound `(4m / 3n)(m - n²/4)` on the number of triangles in
/// a graph with `n` vertices and `m` edges. May be negative, in which case
/// it says nothing.
pub fn goodman_triangle_bound(n_vertices: u64, m_edges: u64) -> Result<Rational> {
    if n_vertices == 0 {
        return Err(Error::Precondition("graph needs at least one vertex".into()));
    }
    let max_edges = binom(n_vertices, 2)?;
    if m_edges as u128 > max_edges {
        return Err(Error::Precondition(format!(
            "{m_edges} edges exceed binomial({n_vertices}, 2) = {max_edges}"
        )));
    }
    let n = n_vertices as i128;
    let m = m_edges as i128;
    Ok(Rational::new(4 * m, 3 * n) * (Rational::from_integer(m) - Rational::new(n * n, 4)))
}

/// `floor((n - 1)² / 4)`, the size of the type-A cover of `J(n, 3)`.
pub fn k3_cover_size(n: u64) -> u64 {
    (n - 1) * (n - 1) / 4
}

/// Upper bound `c(n_a)` on the number of vertices of `J(N, 3)` coverable by
/// `n_a` type-A and `n_b = floor((N-1)²/4) - 1 - n_a` type-B cliques.
pub fn coverable_upper_bound(n: u64, n_a: u64) -> Result<Rational> {
    if n <= 3 {
        return Err(Error::Precondition(format!("need N > 3, got {n}")));
    }
    let total = k3_cover_size(n) - 1;
    if n_a > total {
        return Err(Error::Precondition(format!("n_a = {n_a} exceeds floor((N-1)^2/4) - 1 = {total}")));
    }
    let n_b = total - n_a;
    let missing_edges = n * (n - 1) / 2 - n_a;
    let triangles = goodman_triangle_bound(n, missing_edges)?;
    let vertices = binom(n, 3)? as i128;
    Ok(Rational::from_integer(vertices) - triangles + Rational::from_integer(4 * n_b as i128))
}

/// Ceiling of a rational, as an integer.
pub fn ceil(r: &Rational) -> i128 {
    r.ceil().to_integer()
}

/// Iterated first Johnson bound `α(J(N,k)) <= floor(N/k · α(J(N-1,k-1)))`,
/// anchored at `α(J(n-k+2, 2)) = floor((n-k+2)/2)`.
pub fn johnson_alpha_upper(params: GraphParams) -> Result<u64> {
    let (n, k) = (params.n() as u128, params.k() as u128);
    if k < 2 {
        return Err(Error::Precondition("first Johnson bound chain needs k >= 2".into()));
    }
    let base_n = n - k + 2;
    let mut alpha = base_n / 2;
    for step in 3..=k {
        let nn = base_n + step - 2;
        alpha = nn.checked_mul(alpha).ok_or(Error::Overflow("Johnson bound"))? / step;
    }
    u64::try_from(alpha).map_err(|_| Error::Overflow("Johnson bound"))
}

/// Both Johnson bounds combined with `α(J(n,1)) = 1`, `α(J(n,2)) = floor(n/2)`
/// and the symmetry `α(J(n,k)) = α(J(n,n-k))`. Never used by the Catalan
/// tightness test.
pub fn johnson_alpha_upper_refined(params: GraphParams) -> u64 {
    let n = params.n() as usize;
    // table[m][j] for 1 <= j < m <= n
    let mut table = vec![vec![0u128; n + 1]; n + 1];
    for m in 2..=n {
        for j in 1..m {
            let jj = j.min(m - j);
            table[m][j] = match jj {
                1 => 1,
                2 => (m / 2) as u128,
                _ => {
                    let first = (m as u128 * table[m - 1][j - 1]) / j as u128;
                    let second = if m - 1 > j { (m as u128 * table[m - 1][j]) / (m - j) as u128 } else { first };
                    first.min(second)
                }
            };
        }
    }
    table[n][params.k() as usize] as u64
}

/// Whether the first Johnson bound chain for `α(J(2k, k))` lands exactly on
/// the Catalan number `C_k` (no rounding happens anywhere in the chain).
pub fn catalan_tightness_test(k: u64) -> Result<bool> {
    if k < 2 {
        return Err(Error::Precondition("tightness test needs k >= 2".into()));
    }
    let k32 = u32::try_from(k).map_err(|_| Error::Overflow("k"))?;
    let params = GraphParams::new(2 * k32, k32)?;
    Ok(johnson_alpha_upper(params)? == catalan(k)?)
}

/// θ when a closed form applies (`min(k, n-k)` at most 3), else `None`.
pub fn theta_closed_form(params: GraphParams) -> Option<u64> {
    let n = params.n() as u64;
    let k = params.k().min(params.n() - params.k()) as u64;
    match k {
        1 => Some(1),
        2 => Some(n - 2),
        3 => Some(match n {
            4 => 1,
            5 => 3,
            _ => k3_cover_size(n),
        }),
        _ => None,
    }
}

/// Table lookup of θ (exact value or interval), symmetric in `k ↔ n - k`.
pub fn known_theta(params: GraphParams) -> Option<ThetaValue> {
    table_theta(params)
}

/// Necessary divisibility conditions for a `(v, s, t, λ)` design:
/// `binomial(s-i, t-i)` divides `λ · binomial(v-i, t-i)` for `0 <= i < t`.
pub fn steiner_divisibility(v: u64, s: u64, t: u64, lambda: u64) -> Result<bool> {
    if !(v >= s && s >= t && t >= 1 && lambda >= 1) {
        return Err(Error::Precondition(format!("need v >= s >= t >= 1, λ >= 1; got ({v},{s},{t},{lambda})")));
    }
    for i in 0..t {
        let d = binom(s - i, t - i)?;
        let num = binom(v - i, t - i)?.checked_mul(lambda as u128).ok_or(Error::Overflow("divisibility"))?;
        if num % d != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `T(v, m, n) = C_1(v, v - n, v - m)`: Turán parameters to covering parameters.
pub fn turan_to_covering(v: u64, m: u64, n: u64) -> Result<(u64, u64, u64)> {
    if !(v >= m && m >= n && n >= 1) {
        return Err(Error::Precondition(format!("need v >= m >= n >= 1; got ({v},{m},{n})")));
    }
    Ok((v, v - n, v - m))
}

/// Inverse of [`turan_to_covering`].
pub fn covering_to_turan(v: u64, s: u64, t: u64) -> Result<(u64, u64, u64)> {
    if !(v >= s && s >= t) {
        return Err(Error::Precondition(format!("need v >= s >= t; got ({v},{s},{t})")));
    }
    Ok((v, v - t, v - s))
}

/// Every bound on θ(J(n, k)) we can state without search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub n: u32,
    pub k: u32,
    pub vertices: u64,
    pub omega: u64,
    pub lower_simple: u64,
    pub upper_recursive: u64,
    /// First Johnson bound chain on α; absent for `k = 1`.
    pub alpha_upper_johnson: Option<u64>,
    /// Both Johnson bounds combined.
    pub alpha_upper_refined: u64,
    /// `C_k` when `n = 2k`.
    pub catalan: Option<u64>,
    pub catalan_tight: Option<bool>,
    pub closed_form: Option<u64>,
    pub known_theta: Option<ThetaValue>,
    pub design_upper: Option<u64>,
}

impl BoundsReport {
    /// Smallest proven upper bound among the closed forms we hold.
    pub fn best_upper(&self) -> u64 {
        [Some(self.upper_recursive), self.closed_form, self.design_upper, self.known_theta.map(|t| t.hi)]
            .into_iter()
            .flatten()
            .min()
            .expect("recursive bound always present")
    }

    /// Largest proven lower bound among the closed forms we hold.
    pub fn best_lower(&self) -> u64 {
        [Some(self.lower_simple), self.closed_form, self.known_theta.map(|t| t.lo)]
            .into_iter()
            .flatten()
            .max()
            .expect("simple bound always present")
    }
}

pub fn bounds_report(params: GraphParams, design_upper: Option<u64>) -> BoundsReport {
    let (n, k) = (params.n(), params.k());
    let is_middle = n == 2 * k;
    BoundsReport {
        n,
        k,
        vertices: params.vertex_count(),
        omega: clique_number(params),
        lower_simple: simple_lower_bound(params),
        upper_recursive: recursive_upper_bound(params),
        alpha_upper_johnson: johnson_alpha_upper(params).ok(),
        alpha_upper_refined: johnson_alpha_upper_refined(params),
        catalan: is_middle.then(|| catalan(k as u64).ok()).flatten(),
        catalan_tight: (is_middle && k >= 2).then(|| catalan_tightness_test(k as u64).ok()).flatten(),
        closed_form: theta_closed_form(params),
        known_theta: known_theta(params),
        design_upper,
    }
}

/// Rational to f64, for display only.
pub fn approx(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}
