use super::spectral::SpectralCurve;

/// The differential `ζʲ ηⁱ dζ / (∂P/∂η)`, holomorphic for
/// `0 ≤ i ≤ n - 2`, `0 ≤ j ≤ 2(n - 2 - i)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DifferentialDescriptor {
    pub i: usize,
    pub j: usize,
}

/// All `(n - 1)²` basis differentials of a charge-`n` curve.
pub fn holomorphic_basis(curve: &SpectralCurve) -> Vec<DifferentialDescriptor> {
    holomorphic_basis_for_charge(curve.n())
}

pub fn holomorphic_basis_for_charge(n: usize) -> Vec<DifferentialDescriptor> {
    if n < 2 {
        return Vec::new();
    }
    (0..=n - 2)
        .flat_map(|i| (0..=2 * (n - 2 - i)).map(move |j| DifferentialDescriptor { i, j }))
        .collect()
}
