use num_complex::Complex64;

use crate::StateError;

pub type Mat2 = [[Complex64; 2]; 2];

const C0: Complex64 = Complex64::new(0.0, 0.0);
const C1: Complex64 = Complex64::new(1.0, 0.0);

/// `R(ϱ)` with first column `(ϱ, sqrt(1 − |ϱ|²))` for purely real or purely imaginary `ϱ`.
///
/// Real `ϱ`: `exp(−iσ_y·arccos ϱ)`. Imaginary `ϱ`: `exp(−iσ_x·arccos Im ϱ)·exp(iσ_z·π/2)`.
pub fn rotation_matrix(rho: Complex64) -> Result<Mat2, StateError> {
    if rho.norm() > 1.0 + 1e-12 || !rho.norm().is_finite() {
        return Err(StateError::RotationModulus(rho));
    }
    if rho.re != 0.0 && rho.im != 0.0 {
        return Err(StateError::RotationPhase(rho));
    }
    let m = if rho.im == 0.0 {
        let th = rho.re.clamp(-1.0, 1.0).acos();
        let (s, c) = th.sin_cos();
        [[Complex64::new(c, 0.0), Complex64::new(-s, 0.0)], [Complex64::new(s, 0.0), Complex64::new(c, 0.0)]]
    } else {
        let th = rho.im.clamp(-1.0, 1.0).acos();
        let (s, c) = th.sin_cos();
        // [[c, −is], [−is, c]] · diag(i, −i)
        [[Complex64::new(0.0, c), Complex64::new(-s, 0.0)], [Complex64::new(s, 0.0), Complex64::new(0.0, -c)]]
    };
    Ok(m)
}

pub(crate) fn dagger(m: &Mat2) -> Mat2 {
    [[m[0][0].conj(), m[1][0].conj()], [m[0][1].conj(), m[1][1].conj()]]
}

pub(crate) fn unitarity_defect(m: &Mat2) -> f64 {
    let d = dagger(m);
    let mut worst = 0.0_f64;
    for i in 0..2 {
        for j in 0..2 {
            let p = d[i][0] * m[0][j] + d[i][1] * m[1][j];
            let want = if i == j { C1 } else { C0 };
            worst = worst.max((p - want).norm());
        }
    }
    worst
}

/// Condition on one qubit: the gate acts only where `qubit` reads `value`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Control {
    pub qubit: usize,
    pub value: bool,
}

impl Control {
    pub fn on(qubit: usize) -> Self {
        Control { qubit, value: true }
    }

    pub fn off(qubit: usize) -> Self {
        Control { qubit, value: false }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum GateKind {
    Hadamard,
    PauliX,
    /// `diag(1, e^{iΦ})`
    PhaseShift(f64),
    Rotation { rho: Complex64, adjoint: bool },
    /// `R(ϱ_j)` where `j` is the value of the low `index_bits` qubits (the `v` register).
    VariableRotation {
        table: Vec<Complex64>,
        index_bits: usize,
        adjoint: bool,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct GateOp {
    pub kind: GateKind,
    pub target: usize,
    pub controls: Vec<Control>,
}

impl GateOp {
    fn bare(kind: GateKind, target: usize) -> Self {
        GateOp {
            kind,
            target,
            controls: Vec::new(),
        }
    }

    pub fn hadamard(target: usize) -> Self {
        Self::bare(GateKind::Hadamard, target)
    }

    pub fn x(target: usize) -> Self {
        Self::bare(GateKind::PauliX, target)
    }

    pub fn phase(target: usize, phi: f64) -> Self {
        Self::bare(GateKind::PhaseShift(phi), target)
    }

    pub fn rotation(target: usize, rho: Complex64) -> Result<Self, StateError> {
        rotation_matrix(rho)?;
        Ok(Self::bare(GateKind::Rotation { rho, adjoint: false }, target))
    }

    pub fn variable_rotation(target: usize, table: Vec<Complex64>, index_bits: usize) -> Result<Self, StateError> {
        if table.len() != 1 << index_bits {
            return Err(StateError::TableLength {
                expected: 1 << index_bits,
                got: table.len(),
            });
        }
        if target < index_bits {
            return Err(StateError::TargetInIndex(target));
        }
        for &rho in &table {
            rotation_matrix(rho)?;
        }
        Ok(Self::bare(
            GateKind::VariableRotation {
                table,
                index_bits,
                adjoint: false,
            },
            target,
        ))
    }

    pub fn controlled(mut self, control: Control) -> Self {
        self.controls.push(control);
        self
    }

    pub fn with_controls(mut self, controls: &[Control]) -> Self {
        self.controls.extend_from_slice(controls);
        self
    }

    pub fn adjoint(&self) -> Self {
        let kind = match &self.kind {
            GateKind::Hadamard => GateKind::Hadamard,
            GateKind::PauliX => GateKind::PauliX,
            GateKind::PhaseShift(p) => GateKind::PhaseShift(-p),
            GateKind::Rotation { rho, adjoint } => GateKind::Rotation {
                rho: *rho,
                adjoint: !adjoint,
            },
            GateKind::VariableRotation {
                table,
                index_bits,
                adjoint,
            } => GateKind::VariableRotation {
                table: table.clone(),
                index_bits: *index_bits,
                adjoint: !adjoint,
            },
        };
        GateOp {
            kind,
            target: self.target,
            controls: self.controls.clone(),
        }
    }

    /// The 2×2 action on the target; for variable rotations, one matrix per table entry.
    pub fn matrices(&self) -> Vec<Mat2> {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let fixed = |rho: Complex64, adj: bool| {
            let m = rotation_matrix(rho).expect("validated at construction");
            if adj {
                dagger(&m)
            } else {
                m
            }
        };
        match &self.kind {
            GateKind::Hadamard => vec![[[C1 * s, C1 * s], [C1 * s, -C1 * s]]],
            GateKind::PauliX => vec![[[C0, C1], [C1, C0]]],
            GateKind::PhaseShift(p) => vec![[[C1, C0], [C0, Complex64::from_polar(1.0, *p)]]],
            GateKind::Rotation { rho, adjoint } => vec![fixed(*rho, *adjoint)],
            GateKind::VariableRotation { table, adjoint, .. } => table.iter().map(|r| fixed(*r, *adjoint)).collect(),
        }
    }

    /// Largest deviation from unitarity over the gate's 2×2 blocks.
    pub fn unitarity_defect(&self) -> f64 {
        self.matrices().iter().map(unitarity_defect).fold(0.0, f64::max)
    }

    pub fn validate(&self, n_qubits: usize) -> Result<(), StateError> {
        let check = |qubit: usize| {
            if qubit >= n_qubits {
                Err(StateError::QubitOutOfRange { qubit, n_qubits })
            } else {
                Ok(())
            }
        };
        check(self.target)?;
        for c in &self.controls {
            check(c.qubit)?;
            if c.qubit == self.target {
                return Err(StateError::ControlOnTarget(c.qubit));
            }
        }
        if let GateKind::VariableRotation { index_bits, .. } = self.kind {
            if self.target < index_bits {
                return Err(StateError::TargetInIndex(self.target));
            }
        }
        let defect = self.unitarity_defect();
        if defect > 1e-12 {
            return Err(StateError::NotUnitary(defect));
        }
        Ok(())
    }

    /// `(mask, value)` such that the gate acts on indices with `index & mask == value`.
    pub fn control_pattern(&self) -> (usize, usize) {
        self.controls.iter().fold((0, 0), |(m, v), c| {
            (m | 1 << c.qubit, if c.value { v | 1 << c.qubit } else { v })
        })
    }
}
