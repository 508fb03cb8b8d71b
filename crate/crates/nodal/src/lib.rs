//! Laplacian eigenvalues and exact nodal lengths for the unit disc
//! (Dirichlet and Neumann boundary conditions) and for irrational
//! rectangles and flat tori.
//!
//! Disc eigenvalues are squares of Bessel zeros `j_{k,s}` (Dirichlet) or
//! `j'_{k,s}` (Neumann), and the nodal set of a separated eigenfunction is
//! a union of `k` diameters and `s-1` concentric circles, so the nodal
//! length reduces to a finite sum over a zero table:
//!
//! ```text
//! H1(N(u_{k,s})) = 2k + 2*pi * sum_{l<s} j_{k,l} / j_{k,s}
//! ```
//!
//! The crate computes certified Bessel zeros ([`zeros`]), exact portraits
//! and lengths ([`disc`]), rectangle/torus spectra ([`rect`]), and
//! windowed statistics of the normalized ratio `length / sqrt(lambda)`
//! whose liminf/limsup tend to 1 and 2 on the unit disc ([`analysis`]).
//! [`svg`] renders nodal portraits as deterministic SVG documents.
//!
//! Scans over the `(k, s)` lattice run in parallel with the default
//! `parallel` feature; a sequential fallback is always available and is
//! used for everything when the feature is disabled.

pub mod analysis;
pub mod bessel;
pub mod disc;
pub mod kahan;
pub mod rect;
pub mod svg;
pub mod zeros;

mod error;

pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Boundary condition of a disc mode. Also selects the kind of Bessel
/// zero: Dirichlet modes vanish on the boundary (zeros of `J_k`), Neumann
/// modes have vanishing normal derivative (zeros of `J_k'`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Bc {
    Dirichlet,
    Neumann,
}

impl Bc {
    pub fn as_str(self) -> &'static str {
        match self {
            Bc::Dirichlet => "dirichlet",
            Bc::Neumann => "neumann",
        }
    }
}

impl std::fmt::Display for Bc {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Bc {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "dirichlet" | "d" => Ok(Bc::Dirichlet),
            "neumann" | "n" => Ok(Bc::Neumann),
            other => Err(Error::InvalidInput(format!(
                "unknown boundary condition `{other}` (expected `dirichlet` or `neumann`)"
            ))),
        }
    }
}

/// Formats `x` with `sig` significant digits, locale-independent.
///
/// Used for all human-facing numeric output; machine CSV uses 17
/// significant digits so that values round-trip bit-exactly.
pub fn format_sig(x: f64, sig: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    format!("{:.*e}", sig.saturating_sub(1), x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bc_round_trip() {
        for bc in [Bc::Dirichlet, Bc::Neumann] {
            assert_eq!(bc.as_str().parse::<Bc>().unwrap(), bc);
        }
        assert!("robin".parse::<Bc>().is_err());
    }

    #[test]
    fn sig_formatting() {
        assert_eq!(format_sig(2.404825557695773, 15), "2.40482555769577e0");
        let x = 0.123456789012345678;
        let back: f64 = format_sig(x, 17).parse().unwrap();
        assert_eq!(back, x);
    }
}
