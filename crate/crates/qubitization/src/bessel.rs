//! Integer-order Bessel functions of the first kind by Miller's backward recurrence.

/// `J_m(x)` for `m = 0..=m_max`.
pub fn bessel_j_all(m_max: usize, x: f64) -> Vec<f64> {
    let mut out = vec![0.0; m_max + 1];
    if x == 0.0 {
        out[0] = 1.0;
        return out;
    }
    let ax = x.abs();
    // Start well above both the order and the argument.
    let start = {
        let base = m_max.max(ax.ceil() as usize);
        let s = base + 30 + (40.0 * (base as f64).sqrt()) as usize;
        s + (s & 1)
    };
    let mut next = 0.0_f64;
    let mut cur = 1e-300_f64;
    let mut norm = 0.0_f64;
    for k in (1..=start).rev() {
        let prev = 2.0 * k as f64 / ax * cur - next;
        next = cur;
        cur = prev;
        // `cur` now holds the unnormalised J_{k-1}.
        let m = k - 1;
        if m <= m_max {
            out[m] = cur;
        }
        if m > 0 && m % 2 == 0 {
            norm += 2.0 * cur;
        }
        if cur.abs() > 1e250 {
            next *= 1e-250;
            cur *= 1e-250;
            norm *= 1e-250;
            for v in out.iter_mut() {
                *v *= 1e-250;
            }
        }
    }
    norm += cur;
    for v in out.iter_mut() {
        *v /= norm;
    }
    if x < 0.0 {
        for (m, v) in out.iter_mut().enumerate() {
            if m % 2 == 1 {
                *v = -*v;
            }
        }
    }
    out
}

/// `J_m(x)` for any integer order, using `J_{-m} = (-1)^m J_m`.
pub fn bessel_j(m: i64, x: f64) -> f64 {
    let a = m.unsigned_abs() as usize;
    let v = bessel_j_all(a, x)[a];
    if m < 0 && a % 2 == 1 {
        -v
    } else {
        v
    }
}
