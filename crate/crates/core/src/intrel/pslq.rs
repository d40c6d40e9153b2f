//! PSLQ integer relation search (Ferguson–Bailey, γ = 2/√3).

use rug::{Float, Integer};

use crate::error::{Error, Result};
use crate::numkernel::PrecisionContext;

/// An integer relation `Σ coeffs_i x_i ≈ 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct RelationResult {
    pub coeffs: Vec<Integer>,
    /// `|Σ coeffs_i x_i|` recomputed from the input vector.
    pub residual: Float,
    /// The `max_norm` the search ran under.
    pub norm_bound: Integer,
}

/// Digits needed to search for relations of height `max_norm` among `len`
/// numbers: `len · log10(max_norm) + 40`.
pub fn required_digits(len: usize, max_norm: &Integer) -> u32 {
    let log_h = if *max_norm <= 1 {
        0.0
    } else {
        let h = max_norm.to_f64();
        if h.is_finite() {
            h.log10()
        } else {
            max_norm.significant_bits() as f64 * std::f64::consts::LOG10_2
        }
    };
    // Tiny slack so that exact powers of ten are not pushed up by rounding.
    (len as f64 * log_h + 40.0 - 1e-9).ceil() as u32
}

/// Searches for a nonzero integer vector `c` with `‖c‖∞ ≤ max_norm` and
/// `|Σ c_i x_i| ≤ 10^-(digits-15) ‖x‖`.
///
/// `Ok(None)` means the search certified, through the lower bound
/// `1 / max_j |H_jj|` on the Euclidean norm of any relation, that none
/// exists within the bound. A request the precision cannot support is
/// refused with [`Error::Precision`].
pub fn find_relation(
    x: &[Float],
    max_norm: &Integer,
    ctx: &PrecisionContext,
) -> Result<Option<RelationResult>> {
    if x.is_empty() {
        return Err(Error::domain("find_relation needs a non-empty vector"));
    }
    if *max_norm < 1 {
        return Err(Error::domain("find_relation needs max_norm >= 1"));
    }
    let required = required_digits(x.len(), max_norm);
    if required > ctx.digits() {
        return Err(Error::Precision {
            required,
            available: ctx.digits(),
        });
    }
    let n = x.len();
    let xs: Vec<Float> = x.iter().map(|v| ctx.real(v)).collect();
    let norm_x = xs
        .iter()
        .fold(ctx.zero(), |acc, v| acc + ctx.real(v.square_ref()))
        .sqrt();
    if norm_x.is_zero() {
        return Err(Error::domain("find_relation needs a nonzero vector"));
    }
    let threshold = ctx.pow10(-(ctx.digits() as i32 - 15));

    // An exact zero entry is a relation of height 1 on its own.
    if let Some(i) = xs.iter().position(|v| v.is_zero()) {
        let mut coeffs = vec![Integer::new(); n];
        coeffs[i] = Integer::from(1);
        return Ok(Some(finish(coeffs, &xs, max_norm, ctx)));
    }
    if n == 1 {
        return Ok(None);
    }

    let mut state = Pslq::new(&xs, &norm_x, ctx);
    let cap = 10 * n as u64 * u64::from(ctx.digits());
    let bound = ctx.real(max_norm) * ctx.real(n as u32).sqrt();
    // The initial reduction can already expose the relation, so the check
    // runs before each iteration.
    for step in 0..=cap {
        if step > 0 {
            state.iterate(ctx);
        }
        if let Some(col) = state.small_y(&threshold, ctx) {
            let coeffs: Vec<Integer> = (0..n)
                .map(|i| state.b[i][col].to_integer().expect("finite entries"))
                .collect();
            let height = coeffs
                .iter()
                .map(|c| c.clone().abs())
                .max()
                .expect("n >= 2");
            if height > *max_norm || coeffs.iter().all(|c| *c == 0) {
                return Ok(None);
            }
            let result = finish(coeffs, &xs, max_norm, ctx);
            if result.residual > ctx.real(&threshold * &norm_x) {
                return Err(Error::accuracy(
                    "PSLQ relation check",
                    &result.residual,
                    "candidate relation does not hold at working precision",
                ));
            }
            return Ok(Some(result));
        }
        let lower = state.norm_lower_bound(ctx);
        if let Some(lower) = lower {
            if lower > bound {
                return Ok(None);
            }
        }
    }
    Err(Error::accuracy(
        "PSLQ",
        format!("{cap} iterations"),
        "iteration cap reached without relation or certificate",
    ))
}

fn finish(
    mut coeffs: Vec<Integer>,
    x: &[Float],
    max_norm: &Integer,
    ctx: &PrecisionContext,
) -> RelationResult {
    if let Some(first) = coeffs.iter().find(|c| **c != 0) {
        if *first < 0 {
            for c in coeffs.iter_mut() {
                *c = -c.clone();
            }
        }
    }
    let mut sum = ctx.zero();
    for (c, v) in coeffs.iter().zip(x) {
        sum += ctx.real(c) * v;
    }
    RelationResult {
        coeffs,
        residual: sum.abs(),
        norm_bound: max_norm.clone(),
    }
}

struct Pslq {
    n: usize,
    gamma: Float,
    y: Vec<Float>,
    h: Vec<Vec<Float>>,
    a: Vec<Vec<Float>>,
    b: Vec<Vec<Float>>,
}

impl Pslq {
    fn new(x: &[Float], norm_x: &Float, ctx: &PrecisionContext) -> Self {
        let n = x.len();
        let y: Vec<Float> = x.iter().map(|v| ctx.real(v / norm_x)).collect();
        // s_k = ‖y_k..y_{n-1}‖
        let mut s = vec![ctx.zero(); n];
        let mut acc = ctx.zero();
        for k in (0..n).rev() {
            acc += ctx.real(y[k].square_ref());
            s[k] = ctx.real(acc.sqrt_ref());
        }
        let mut h = vec![vec![ctx.zero(); n - 1]; n];
        for i in 0..n {
            for j in 0..(n - 1).min(i + 1) {
                if i == j {
                    h[i][j] = ctx.real(&s[j + 1] / &s[j]);
                } else {
                    let den = ctx.real(&s[j] * &s[j + 1]);
                    h[i][j] = -ctx.real(&y[i] * &y[j]) / den;
                }
            }
        }
        let ident = |n: usize| -> Vec<Vec<Float>> {
            (0..n)
                .map(|i| (0..n).map(|j| ctx.real(u32::from(i == j))).collect())
                .collect()
        };
        let mut state = Pslq {
            n,
            gamma: (ctx.real(4) / 3u32).sqrt(),
            y,
            h,
            a: ident(n),
            b: ident(n),
        };
        for i in 1..n {
            state.reduce_row(i, i - 1, ctx);
        }
        state
    }

    /// Hermite reduction of row `i` against rows `upto..=0`.
    fn reduce_row(&mut self, i: usize, upto: usize, ctx: &PrecisionContext) {
        for j in (0..=upto).rev() {
            if self.h[j][j].is_zero() {
                continue;
            }
            let t = ctx.real(&self.h[i][j] / &self.h[j][j]).round();
            if t.is_zero() {
                continue;
            }
            let yi = ctx.real(&t * &self.y[i]);
            self.y[j] += yi;
            for k in 0..=j {
                let d = ctx.real(&t * &self.h[j][k]);
                self.h[i][k] -= d;
            }
            for k in 0..self.n {
                let d = ctx.real(&t * &self.a[j][k]);
                self.a[i][k] -= d;
                let e = ctx.real(&t * &self.b[k][i]);
                self.b[k][j] += e;
            }
        }
    }

    fn iterate(&mut self, ctx: &PrecisionContext) {
        let n = self.n;
        let mut best = ctx.zero();
        let mut m = 0;
        let mut weight = self.gamma.clone();
        for i in 0..n - 1 {
            let v = ctx.real(self.h[i][i].abs_ref()) * &weight;
            if v > best {
                best = v;
                m = i;
            }
            weight *= &self.gamma;
        }
        self.y.swap(m, m + 1);
        self.a.swap(m, m + 1);
        self.h.swap(m, m + 1);
        for row in self.b.iter_mut() {
            row.swap(m, m + 1);
        }
        if m + 2 < n {
            let hmm = self.h[m][m].clone();
            let hmm1 = self.h[m][m + 1].clone();
            let t0 = ctx.real(hmm.hypot_ref(&hmm1));
            let t1 = ctx.real(&hmm / &t0);
            let t2 = ctx.real(&hmm1 / &t0);
            for i in m..n {
                let t3 = self.h[i][m].clone();
                let t4 = self.h[i][m + 1].clone();
                self.h[i][m] = ctx.real(&t1 * &t3) + ctx.real(&t2 * &t4);
                self.h[i][m + 1] = ctx.real(&t1 * &t4) - ctx.real(&t2 * &t3);
            }
        }
        for i in m + 1..n {
            let upto = (i - 1).min(m + 1);
            self.reduce_row(i, upto, ctx);
        }
    }

    fn small_y(&self, threshold: &Float, ctx: &PrecisionContext) -> Option<usize> {
        let mut best: Option<(usize, Float)> = None;
        for (i, v) in self.y.iter().enumerate() {
            let a = ctx.real(v.abs_ref());
            if a <= *threshold && best.as_ref().is_none_or(|(_, b)| a < *b) {
                best = Some((i, a));
            }
        }
        best.map(|(i, _)| i)
    }

    /// `1 / max_j |H_jj|`, a lower bound on the norm of any relation.
    fn norm_lower_bound(&self, ctx: &PrecisionContext) -> Option<Float> {
        let max = (0..self.n - 1)
            .map(|j| ctx.real(self.h[j][j].abs_ref()))
            .fold(ctx.zero(), |m, v| m.max(&v));
        if max.is_zero() {
            None
        } else {
            Some(max.recip())
        }
    }
}
