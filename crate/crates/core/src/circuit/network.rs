//! Discrete ladder model of the cavity.
//!
//! N nodes, each shunted to ground by a capacitor, joined by N−1 series branches.
//! Every branch is the line's inductance ℓΔx in series with its loss rΔx, except
//! the two branches that hold the resistors. Both ends are open. The end nodes
//! carry half a segment of capacitance (cΔx/2), so that the ladder holds exactly
//! cL of capacitance. The bare ladder's resonances converge to ω_k at O(1/N²);
//! the two resistor branches carry no inductance and push them up by O(k/N).
//!
//! The unknowns are the N−1 branch currents. Eliminating the node voltages gives
//! Z(ω)·I = δV with a symmetric tridiagonal Z.

use num_complex::Complex64;

use super::tridiag::solve_in_place;
use crate::error::{Error, Result};
use crate::model::params::SystemParams;

pub const DEFAULT_N_NODES: usize = 100;
pub const MIN_N_NODES: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Branch {
    Inductive { inductance: f64, resistance: f64 },
    Resistive { resistance: f64 },
}

impl Branch {
    pub fn impedance(&self, omega: f64) -> Complex64 {
        match *self {
            Branch::Inductive {
                inductance,
                resistance,
            } => Complex64::new(resistance, omega * inductance),
            Branch::Resistive { resistance } => Complex64::new(resistance, 0.0),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LumpedNetwork {
    pub n_nodes: usize,
    /// Segment length L/(N−1), m.
    pub dx: f64,
    /// Interior node capacitance cΔx, F. The two end nodes carry half of it.
    pub node_capacitance: f64,
    pub branches: Vec<Branch>,
    /// 1-based branch numbers holding resistor 1 and resistor 2.
    pub resistor_branches: (usize, usize),
}

/// 1-based branch that a resistor at fraction `x` of the length occupies.
pub fn branch_for_position(x: f64, n_nodes: usize) -> usize {
    let last = n_nodes - 1;
    ((x * last as f64).round() as usize).clamp(1, last)
}

/// Builds the ladder for `params` with `n_nodes` nodes.
pub fn build_network(params: &SystemParams, n_nodes: usize) -> Result<LumpedNetwork> {
    params.validate()?;
    if n_nodes < MIN_N_NODES {
        return Err(Error::invalid(
            "n_nodes",
            format!("must be at least {MIN_N_NODES}, got {n_nodes}"),
        ));
    }
    let cavity = &params.cavity;
    let dx = cavity.length / (n_nodes - 1) as f64;
    let i = branch_for_position(params.resistor1.position_fraction, n_nodes);
    let j = branch_for_position(params.resistor2.position_fraction, n_nodes);
    if i == j {
        return Err(Error::SameBranch(i));
    }

    let line = Branch::Inductive {
        inductance: cavity.ind_per_len * dx,
        resistance: cavity.loss_per_len * dx,
    };
    let mut branches = vec![line; n_nodes - 1];
    branches[i - 1] = Branch::Resistive {
        resistance: params.resistor1.resistance,
    };
    branches[j - 1] = Branch::Resistive {
        resistance: params.resistor2.resistance,
    };

    Ok(LumpedNetwork {
        n_nodes,
        dx,
        node_capacitance: cavity.cap_per_len * dx,
        branches,
        resistor_branches: (i, j),
    })
}

impl LumpedNetwork {
    /// Number of branch currents, N−1.
    pub fn dimension(&self) -> usize {
        self.branches.len()
    }

    /// Resistances of the two resistor branches.
    pub fn resistances(&self) -> (f64, f64) {
        let r = |b: usize| match self.branches[b - 1] {
            Branch::Resistive { resistance } => resistance,
            Branch::Inductive { .. } => unreachable!("resistor branch holds a resistor"),
        };
        (r(self.resistor_branches.0), r(self.resistor_branches.1))
    }

    fn capacitance_of_node(&self, node: usize) -> f64 {
        if node == 0 || node == self.n_nodes - 1 {
            0.5 * self.node_capacitance
        } else {
            self.node_capacitance
        }
    }

    /// Z(ω) in tridiagonal form.
    ///
    /// Row n (branch between nodes n and n+1, 0-based) reads
    /// (Z_n + X_n + X_{n+1})·I_n − X_n·I_{n−1} − X_{n+1}·I_{n+1} = δV_n,
    /// where X_k = 1/(iωC_k) is node k's capacitive reactance.
    pub fn impedance(&self, omega: f64) -> Result<ImpedanceMatrix> {
        if !(omega > 0.0) {
            return Err(Error::NonPositiveFrequency(omega));
        }
        let reactance = |node: usize| Complex64::new(0.0, -1.0 / (omega * self.capacitance_of_node(node)));
        let m = self.dimension();
        let diagonal = (0..m)
            .map(|n| self.branches[n].impedance(omega) + reactance(n) + reactance(n + 1))
            .collect();
        let coupling: Vec<Complex64> = (1..m).map(|node| -reactance(node)).collect();
        Ok(ImpedanceMatrix {
            omega,
            diagonal,
            upper: coupling.clone(),
            lower: coupling,
        })
    }
}

/// Tridiagonal branch-impedance matrix at one frequency.
#[derive(Debug, Clone, PartialEq)]
pub struct ImpedanceMatrix {
    pub omega: f64,
    pub diagonal: Vec<Complex64>,
    /// Z[n][n+1].
    pub upper: Vec<Complex64>,
    /// Z[n+1][n].
    pub lower: Vec<Complex64>,
}

impl ImpedanceMatrix {
    pub fn dimension(&self) -> usize {
        self.diagonal.len()
    }

    /// Solves Z·x = rhs.
    pub fn solve(&self, rhs: &[Complex64]) -> Result<Vec<Complex64>> {
        let mut lower = self.lower.clone();
        let mut diag = self.diagonal.clone();
        let mut upper = self.upper.clone();
        let mut x = rhs.to_vec();
        solve_in_place(&mut lower, &mut diag, &mut upper, &mut x)
            .map_err(|_| Error::SingularImpedance { omega: self.omega })?;
        Ok(x)
    }

    /// (Z⁻¹)[row][col] (0-based): current in branch `row` per volt driven in branch `col`.
    pub fn trans_impedance(&self, row: usize, col: usize) -> Result<Complex64> {
        let dim = self.dimension();
        if row >= dim || col >= dim {
            return Err(Error::MatrixIndexOutOfRange { row, col, dim });
        }
        let mut unit = vec![Complex64::new(0.0, 0.0); dim];
        unit[col] = Complex64::new(1.0, 0.0);
        Ok(self.solve(&unit)?[row])
    }
}
