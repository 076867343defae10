/// Named registers of the algorithm.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Register {
    B,
    Q,
    R,
    A,
    V,
    Extra,
}

/// Qubit positions for `n_v + 7` qubits plus optional extra qubits on top.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RegisterLayout {
    pub n_v: usize,
    pub n_extra: usize,
}

/// Register values of one basis index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Registers {
    pub extra: usize,
    pub b: usize,
    pub q: usize,
    pub r: usize,
    pub a: usize,
    pub v: usize,
}

pub const N_ANCILLA_A: usize = 4;

impl RegisterLayout {
    pub fn new(n_v: usize) -> Self {
        RegisterLayout { n_v, n_extra: 0 }
    }

    pub fn with_extra(n_v: usize, n_extra: usize) -> Self {
        RegisterLayout { n_v, n_extra }
    }

    pub fn n_qubits(&self) -> usize {
        self.n_v + 7 + self.n_extra
    }

    pub fn dim(&self) -> usize {
        1 << self.n_qubits()
    }

    /// Number of velocity points `N_v = 2^{n_v}`.
    pub fn n_points(&self) -> usize {
        1 << self.n_v
    }

    pub fn v(&self, i: usize) -> usize {
        assert!(i < self.n_v, "v register has {} qubits", self.n_v);
        i
    }

    pub fn a(&self, i: usize) -> usize {
        assert!(i < N_ANCILLA_A, "a register has 4 qubits");
        self.n_v + i
    }

    pub fn r(&self) -> usize {
        self.n_v + 4
    }

    pub fn q(&self) -> usize {
        self.n_v + 5
    }

    pub fn b(&self) -> usize {
        self.n_v + 6
    }

    pub fn extra(&self, i: usize) -> usize {
        assert!(i < self.n_extra, "only {} extra qubits", self.n_extra);
        self.n_v + 7 + i
    }

    pub fn v_qubits(&self) -> Vec<usize> {
        (0..self.n_v).collect()
    }

    pub fn register_of(&self, qubit: usize) -> Option<Register> {
        let n = self.n_v;
        match qubit {
            x if x < n => Some(Register::V),
            x if x < n + 4 => Some(Register::A),
            x if x == n + 4 => Some(Register::R),
            x if x == n + 5 => Some(Register::Q),
            x if x == n + 6 => Some(Register::B),
            x if x < self.n_qubits() => Some(Register::Extra),
            _ => None,
        }
    }

    /// Mask of every qubit outside the data register `s = (r, v)`.
    pub fn ancilla_mask(&self) -> usize {
        (self.dim() - 1) & !self.s_mask()
    }

    pub fn s_mask(&self) -> usize {
        (1 << self.r()) | (self.n_points() - 1)
    }

    pub fn is_good(&self, index: usize) -> bool {
        index & self.ancilla_mask() == 0
    }

    /// Data index `s = r·N_v + v`.
    pub fn s_index(&self, index: usize) -> usize {
        let r = (index >> self.r()) & 1;
        r * self.n_points() + (index & (self.n_points() - 1))
    }

    /// Basis index of data index `s` with every ancilla at zero.
    pub fn good_index(&self, s: usize) -> usize {
        assert!(s < 2 * self.n_points());
        let r = s / self.n_points();
        (r << self.r()) | (s % self.n_points())
    }

    pub fn decompose(&self, index: usize) -> Registers {
        let n = self.n_v;
        Registers {
            extra: index >> (n + 7),
            b: (index >> self.b()) & 1,
            q: (index >> self.q()) & 1,
            r: (index >> self.r()) & 1,
            a: (index >> n) & 0xF,
            v: index & (self.n_points() - 1),
        }
    }

    pub fn compose(&self, regs: &Registers) -> usize {
        let n = self.n_v;
        (regs.extra << (n + 7)) | (regs.b << self.b()) | (regs.q << self.q()) | (regs.r << self.r()) | (regs.a << n) | regs.v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn qubit_count_and_order() {
        let l = RegisterLayout::new(5);
        assert_eq!(l.n_qubits(), 12);
        assert_eq!(l.dim(), 4096);
        assert_eq!((l.b(), l.q(), l.r(), l.a(0), l.a(3), l.v(0)), (11, 10, 9, 5, 8, 0));
        assert_eq!(l.register_of(9), Some(Register::R));
        assert_eq!(l.register_of(12), None);
    }

    #[test]
    fn compose_round_trip() {
        let l = RegisterLayout::with_extra(3, 1);
        for index in 0..l.dim() {
            assert_eq!(l.compose(&l.decompose(index)), index);
        }
    }

    #[test]
    fn data_index_mapping() {
        let l = RegisterLayout::new(2);
        assert_eq!(l.good_index(4), 1 << l.r());
        for s in 0..8 {
            assert_eq!(l.s_index(l.good_index(s)), s);
            assert!(l.is_good(l.good_index(s)));
        }
        assert!(!l.is_good(1 << l.a(2)));
        assert!(!l.is_good(1 << l.b()));
    }
}
