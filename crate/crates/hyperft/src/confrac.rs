//! Taylor series to continued fraction by the quotient-difference algorithm,
//! plus continued-fraction evaluation and re-expansion.
//!
//! The corresponding continued fraction of a series converges in a wider
//! region than the series' own disk, so evaluating it *is* the analytic
//! continuation. The quotient-difference recurrences are numerically
//! unstable by nature; they are run at full working precision with no
//! stabilization, which is exactly why the whole crate is multiprecision.

use crate::error::Error;
use crate::numerics::{BigComplex, BigReal, PrecisionContext};
use crate::Result;

/// Decimal digits of headroom under the working precision at which a value
/// counts as an exact zero for termination/breakdown decisions.
const ZERO_MARGIN_DIGITS: i64 = 5;

/// A truncated continued fraction
/// `a1 / (1 + a2 w / (1 + a3 w / (1 + ...)))` in `w = zeta - center`.
#[derive(Debug, Clone)]
pub struct ContinuedFraction {
    center: BigComplex,
    a: Vec<BigComplex>,
    terminated: bool,
}

impl ContinuedFraction {
    /// Reassembles a fraction from stored parts (persistence layer).
    pub fn from_parts(center: BigComplex, a: Vec<BigComplex>, terminated: bool) -> Self {
        ContinuedFraction {
            center,
            a,
            terminated,
        }
    }

    pub fn center(&self) -> &BigComplex {
        &self.center
    }

    /// Partial numerators `a1..aM`.
    pub fn coefficients(&self) -> &[BigComplex] {
        &self.a
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    /// True when a trailing exact-zero partial numerator ended the fraction,
    /// i.e. the fraction is exactly a rational function.
    pub fn terminated(&self) -> bool {
        self.terminated
    }
}

fn zero_tolerance(ctx: &PrecisionContext) -> BigReal {
    ctx.ten_pow(-(ctx.decimal_digits() as i64 - ZERO_MARGIN_DIGITS))
}

fn negligible(v: &BigComplex, scale: &BigReal, tol: &BigReal) -> bool {
    v.abs() <= tol * scale
}

/// Converts Taylor coefficients about `center` into the coefficients of the
/// corresponding continued fraction.
///
/// The tableau is generated along anti-diagonals, keeping only the two most
/// recent ones; the output `a_{t+2}` falls out of anti-diagonal `t`. A value
/// counts as zero when it is below `10^-(d-5)` relative to its natural scale
/// (the largest coefficient for the input scan, the entries feeding a
/// cancellation for tableau values).
///
/// A zero input coefficient is an error: the quotients `c_{n+1}/c_n` cannot
/// be formed, and the fix is a different expansion center. A vanishing `e`
/// column ends the fraction gracefully (`terminated`), since the underlying
/// function is rational; a vanishing `e` denominator inside an otherwise
/// live column is a breakdown.
pub fn qd_transform(
    c: &[BigComplex],
    center: &BigComplex,
    ctx: &PrecisionContext,
) -> Result<ContinuedFraction> {
    if c.is_empty() {
        return Err(Error::InvalidSpec("empty coefficient sequence".into()));
    }
    let tol = zero_tolerance(ctx);

    let mut c_scale = ctx.zero();
    for v in c {
        let m = v.abs();
        if m > c_scale {
            c_scale = m;
        }
    }
    for (n, v) in c.iter().enumerate() {
        if negligible(v, &c_scale, &tol) {
            return Err(Error::ZeroCoefficient { index: n });
        }
    }

    let m = c.len();
    let mut a: Vec<BigComplex> = Vec::with_capacity(m);
    a.push(c[0].clone());
    if m == 1 {
        return Ok(ContinuedFraction {
            center: center.clone(),
            a,
            terminated: false,
        });
    }

    // prev/curr hold one anti-diagonal each; the scale vectors record the
    // magnitude of the terms that formed each entry (used for e entries).
    let mut prev: Vec<BigComplex> = Vec::new();
    let mut prev_scale: Vec<BigReal> = Vec::new();
    let mut e_col_dead: Vec<bool> = Vec::new();

    for t in 0..=(m - 2) {
        let mut curr: Vec<BigComplex> = Vec::with_capacity(t + 1);
        let mut curr_scale: Vec<BigReal> = Vec::with_capacity(t + 1);

        for p in 0..=t {
            if p == 0 {
                // q_1^{(t)} = c_{t+1} / c_t
                let q = &c[t + 1] / &c[t];
                curr_scale.push(q.abs());
                curr.push(q);
            } else if p % 2 == 1 {
                // e_k^{(n)} = q_k^{(n+1)} - q_k^{(n)} + e_{k-1}^{(n+1)}
                let k = p.div_ceil(2);
                let q_up = curr[p - 1].clone();
                let q_down = &prev[p - 1];
                let mut value = &q_up - q_down;
                let mut scale = q_up.abs().max(&q_down.abs());
                if k >= 2 {
                    let e_prev = &prev[p - 2];
                    value = &value + e_prev;
                    scale = scale.max(&e_prev.abs());
                }
                if e_col_dead.len() < k {
                    e_col_dead.push(true);
                }
                let dead = negligible(&value, &scale, &tol);
                e_col_dead[k - 1] = e_col_dead[k - 1] && dead;
                curr_scale.push(scale);
                curr.push(value);
            } else {
                // q_{k+1}^{(n)} = q_k^{(n+1)} * e_k^{(n+1)} / e_k^{(n)}
                let k = p / 2;
                let denom = &prev[p - 1];
                let denom_scale = &prev_scale[p - 1];
                if negligible(denom, denom_scale, &tol) {
                    let numer = &curr[p - 1];
                    let numer_scale = &curr_scale[p - 1];
                    if e_col_dead[k - 1] && negligible(numer, numer_scale, &tol) {
                        // Whole e column is zero: the series is a rational
                        // function and the fraction ends at a_{2k+1} = 0.
                        a.truncate(2 * k);
                        a.push(ctx.complex_zero());
                        return Ok(ContinuedFraction {
                            center: center.clone(),
                            a,
                            terminated: true,
                        });
                    }
                    return Err(Error::Breakdown {
                        column: k,
                        row: t - p,
                    });
                }
                let value = &(&prev[p - 2] * &curr[p - 1]) / denom;
                curr_scale.push(value.abs());
                curr.push(value);
            }
        }

        a.push(-&curr[t]);
        prev = curr;
        prev_scale = curr_scale;
    }

    Ok(ContinuedFraction {
        center: center.clone(),
        a,
        terminated: false,
    })
}

/// Evaluates the depth-term truncation of a continued fraction at `zeta`.
///
/// Backward recurrence: start from the deepest term and fold upward, which
/// avoids the overflow-prone partial numerators of the forward three-term
/// scheme.
pub fn cf_eval(
    cf: &ContinuedFraction,
    zeta: &BigComplex,
    depth: usize,
    ctx: &PrecisionContext,
) -> Result<BigComplex> {
    if depth == 0 || depth > cf.len() {
        return Err(Error::Domain {
            op: "cf_eval",
            detail: format!("depth {depth} outside 1..={}", cf.len()),
        });
    }
    let a = &cf.a;
    if depth == 1 {
        return Ok(a[0].clone());
    }
    let w = zeta - cf.center();
    let pole_tol = zero_tolerance(ctx);

    let mut tail = &a[depth - 1] * &w;
    for j in (2..depth).rev() {
        let denom = &ctx.complex_one() + &tail;
        if denom.abs() < pole_tol {
            return Err(Error::NearPole { depth: j });
        }
        tail = &(&a[j - 1] * &w) / &denom;
    }
    let denom = &ctx.complex_one() + &tail;
    if denom.abs() < pole_tol {
        return Err(Error::NearPole { depth: 1 });
    }
    Ok(&a[0] / &denom)
}

/// First `m` Taylor coefficients at the center of the full-depth truncation,
/// obtained by running the backward recurrence in truncated power-series
/// arithmetic. This is the test oracle for the correspondence property.
pub fn cf_reexpand(
    cf: &ContinuedFraction,
    m: usize,
    ctx: &PrecisionContext,
) -> Result<Vec<BigComplex>> {
    if m == 0 || m > cf.len() {
        return Err(Error::Domain {
            op: "cf_reexpand",
            detail: format!("order {m} outside 1..={}", cf.len()),
        });
    }
    let a = &cf.a;
    let depth = cf.len();

    // tail series t(w); t[0] stays exactly zero throughout.
    let mut tail: Vec<BigComplex> = vec![ctx.complex_zero(); m];
    if depth >= 2 && m >= 2 {
        tail[1] = a[depth - 1].clone();
    }
    for j in (2..depth).rev() {
        let inv = invert_unit_series(&tail, m, ctx);
        let mut next = vec![ctx.complex_zero(); m];
        for (i, slot) in next.iter_mut().enumerate().take(m).skip(1) {
            *slot = &a[j - 1] * &inv[i - 1];
        }
        tail = next;
    }
    let inv = invert_unit_series(&tail, m, ctx);
    Ok(inv.iter().map(|v| &a[0] * v).collect())
}

/// Inverts `1 + t(w)` mod `w^m` where `t` has zero constant term.
fn invert_unit_series(tail: &[BigComplex], m: usize, ctx: &PrecisionContext) -> Vec<BigComplex> {
    let mut inv = vec![ctx.complex_zero(); m];
    inv[0] = ctx.complex_one();
    for k in 1..m {
        let mut acc = ctx.complex_zero();
        for j in 1..=k {
            acc = &acc + &(&tail[j] * &inv[k - j]);
        }
        inv[k] = -&acc;
    }
    inv
}

/// Full quotient-difference tableau, materialized column by column.
///
/// `qd_transform` only ever keeps two anti-diagonals; this type builds the
/// whole triangle for inspection and serves as an independent route to the
/// same first-row outputs in tests.
#[derive(Debug, Clone)]
pub struct QdTableau {
    /// `e[k][n]` holds `e_k^{(n)}`; `e[0]` is the zero column.
    pub e: Vec<Vec<BigComplex>>,
    /// `q[k][n]` holds `q_{k+1}^{(n)}` (quotient columns start at 1).
    pub q: Vec<Vec<BigComplex>>,
}

impl QdTableau {
    /// Builds every defined entry for the given coefficients. No zero or
    /// breakdown policing; divisions by exact zeros yield non-finite entries.
    pub fn build(c: &[BigComplex], ctx: &PrecisionContext) -> QdTableau {
        let m = c.len();
        let rows = m.saturating_sub(1);
        let mut e: Vec<Vec<BigComplex>> = vec![(0..rows).map(|_| ctx.complex_zero()).collect()];
        let mut q: Vec<Vec<BigComplex>> = Vec::new();

        let q1: Vec<BigComplex> = (0..rows).map(|n| &c[n + 1] / &c[n]).collect();
        q.push(q1);

        let mut k = 1usize;
        loop {
            // e_k column from q_k and e_{k-1}
            let q_k = &q[k - 1];
            if q_k.len() < 2 {
                break;
            }
            let e_col: Vec<BigComplex> = (0..q_k.len() - 1)
                .map(|n| &(&q_k[n + 1] - &q_k[n]) + &e[k - 1][n + 1])
                .collect();
            e.push(e_col);

            // q_{k+1} column from q_k and e_k
            let e_k = &e[k];
            if e_k.len() < 2 {
                break;
            }
            let q_col: Vec<BigComplex> = (0..e_k.len() - 1)
                .map(|n| &(&q[k - 1][n + 1] * &e_k[n + 1]) / &e_k[n])
                .collect();
            q.push(q_col);
            k += 1;
        }

        QdTableau { e, q }
    }

    /// First-row outputs `a1 = c0, a_{2k} = -q_k^{(0)}, a_{2k+1} = -e_k^{(0)}`.
    pub fn first_row_coefficients(&self, c0: &BigComplex, m: usize) -> Vec<BigComplex> {
        let mut a = vec![c0.clone()];
        let mut k = 1usize;
        while a.len() < m {
            match self.q.get(k - 1).and_then(|col| col.first()) {
                Some(v) => a.push(-v),
                None => break,
            }
            if a.len() >= m {
                break;
            }
            match self.e.get(k).and_then(|col| col.first()) {
                Some(v) => a.push(-v),
                None => break,
            }
            k += 1;
        }
        a
    }
}
