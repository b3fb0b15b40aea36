//! Circulant graph families and instances.

use num_bigint::BigInt;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::GraphError;

/// Which of the two parameterizations a family uses: C_n(s₁,…,s_k) with all
/// vertex degrees 2k, or C_{2n}(s₁,…,s_k,n) whose extra diameter jump makes
/// every degree 2k+1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    EvenValency,
    OddValency,
}

/// A parameterized circulant family with a fixed jump set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CirculantFamily {
    kind: FamilyKind,
    jumps: Vec<u64>,
}

impl CirculantFamily {
    pub fn new(kind: FamilyKind, jumps: Vec<u64>) -> Result<Self, GraphError> {
        if jumps.is_empty() || jumps[0] == 0 || jumps.windows(2).any(|w| w[0] >= w[1]) {
            return Err(GraphError::BadJumps);
        }
        Ok(CirculantFamily { kind, jumps })
    }

    pub fn even(jumps: &[u64]) -> Result<Self, GraphError> {
        Self::new(FamilyKind::EvenValency, jumps.to_vec())
    }

    pub fn odd(jumps: &[u64]) -> Result<Self, GraphError> {
        Self::new(FamilyKind::OddValency, jumps.to_vec())
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn jumps(&self) -> &[u64] {
        &self.jumps
    }

    /// q = s₁² + s₂² + … + s_k².
    pub fn q(&self) -> u64 {
        self.jumps.iter().map(|s| s * s).sum()
    }

    /// Largest jump s_k.
    pub fn s_max(&self) -> u64 {
        *self.jumps.last().unwrap()
    }

    /// Vertex count of the instance with parameter n.
    pub fn vertex_count(&self, n: u64) -> u64 {
        match self.kind {
            FamilyKind::EvenValency => n,
            FamilyKind::OddValency => 2 * n,
        }
    }
}

impl fmt::Display for CirculantFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.kind {
            FamilyKind::EvenValency => "C",
            FamilyKind::OddValency => "C2",
        };
        write!(f, "{tag}[")?;
        for (i, s) in self.jumps.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "]")
    }
}

/// Default bound on instance vertex counts (cubic determinant cost).
pub const DEFAULT_VERTEX_CAP: u64 = 4096;

/// One member of a family: the graph C_n(s₁,…,s_k) or C_{2n}(s₁,…,s_k,n).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphInstance {
    family: CirculantFamily,
    n: u64,
    simple: bool,
}

impl GraphInstance {
    pub fn new(family: CirculantFamily, n: u64) -> Result<Self, GraphError> {
        Self::with_vertex_cap(family, n, DEFAULT_VERTEX_CAP)
    }

    pub fn with_vertex_cap(family: CirculantFamily, n: u64, cap: u64) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::BadParameter);
        }
        let count = family.vertex_count(n);
        if count > cap {
            return Err(GraphError::VertexCap { count, cap });
        }
        let simple = match family.kind() {
            FamilyKind::EvenValency => 2 * family.s_max() < n,
            FamilyKind::OddValency => family.s_max() < n,
        };
        Ok(GraphInstance { family, n, simple })
    }

    pub fn family(&self) -> &CirculantFamily {
        &self.family
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// False when the multigraph convention is in effect for this instance.
    pub fn is_simple(&self) -> bool {
        self.simple
    }

    pub fn vertex_count(&self) -> u64 {
        self.family.vertex_count(self.n)
    }
}

/// Which computation path produced a τ value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum TauPath {
    ClosedForm,
    DeterminantOracle,
    SeriesCoefficient,
}

impl fmt::Display for TauPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TauPath::ClosedForm => "closed-form",
            TauPath::DeterminantOracle => "determinant-oracle",
            TauPath::SeriesCoefficient => "series-coefficient",
        };
        f.write_str(s)
    }
}

/// One τ(n) value together with the paths that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TauCertificate {
    pub n: u64,
    pub tau: BigInt,
    pub paths: BTreeMap<TauPath, BigInt>,
    pub agree: bool,
}

impl TauCertificate {
    pub fn new(n: u64, paths: BTreeMap<TauPath, BigInt>) -> Self {
        assert!(!paths.is_empty());
        let tau = paths
            .get(&TauPath::ClosedForm)
            .unwrap_or_else(|| paths.values().next().unwrap())
            .clone();
        let agree = paths.values().all(|v| *v == tau);
        TauCertificate {
            n,
            tau,
            paths,
            agree,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_jump_lists() {
        assert!(CirculantFamily::even(&[]).is_err());
        assert!(CirculantFamily::even(&[0, 1]).is_err());
        assert!(CirculantFamily::even(&[2, 2]).is_err());
        assert!(CirculantFamily::even(&[3, 1]).is_err());
        assert!(CirculantFamily::even(&[1, 2, 5]).is_ok());
    }

    #[test]
    fn derived_quantities() {
        let f = CirculantFamily::even(&[1, 2, 3]).unwrap();
        assert_eq!(f.q(), 14);
        assert_eq!(f.s_max(), 3);
        let g = CirculantFamily::odd(&[1, 2]).unwrap();
        assert_eq!(g.q(), 5);
        assert_eq!(g.vertex_count(7), 14);
    }

    #[test]
    fn simple_flag_boundaries() {
        let f = CirculantFamily::even(&[1, 2]).unwrap();
        assert!(GraphInstance::new(f.clone(), 5).unwrap().is_simple());
        assert!(!GraphInstance::new(f.clone(), 4).unwrap().is_simple());
        let m = CirculantFamily::odd(&[1]).unwrap();
        assert!(GraphInstance::new(m.clone(), 2).unwrap().is_simple());
        assert!(!GraphInstance::new(m, 1).unwrap().is_simple());
    }

    #[test]
    fn vertex_cap_enforced() {
        let f = CirculantFamily::even(&[1]).unwrap();
        assert!(matches!(
            GraphInstance::new(f.clone(), 5000),
            Err(GraphError::VertexCap { .. })
        ));
        assert!(GraphInstance::with_vertex_cap(f, 5000, 10_000).is_ok());
    }

    #[test]
    fn certificate_agreement() {
        let mut paths = BTreeMap::new();
        paths.insert(TauPath::ClosedForm, BigInt::from(125));
        paths.insert(TauPath::DeterminantOracle, BigInt::from(125));
        let cert = TauCertificate::new(5, paths.clone());
        assert!(cert.agree);
        paths.insert(TauPath::SeriesCoefficient, BigInt::from(124));
        assert!(!TauCertificate::new(5, paths).agree);
    }
}
