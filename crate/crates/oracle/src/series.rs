use std::io::{BufRead, Write};

use num_complex::Complex64;

use crate::OracleError;

/// Sampled electric field `Ẽ(t_i)` and optional velocity snapshots.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeSeries {
    pub times: Vec<f64>,
    pub e_field: Vec<Complex64>,
    pub f_prime: Option<Vec<Vec<Complex64>>>,
}

impl TimeSeries {
    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    /// Samples with `lo ≤ t ≤ hi`.
    pub fn window(&self, lo: f64, hi: f64) -> TimeSeries {
        let keep: Vec<usize> = (0..self.len()).filter(|&i| self.times[i] >= lo && self.times[i] <= hi).collect();
        TimeSeries {
            times: keep.iter().map(|&i| self.times[i]).collect(),
            e_field: keep.iter().map(|&i| self.e_field[i]).collect(),
            f_prime: self.f_prime.as_ref().map(|s| keep.iter().map(|&i| s[i].clone()).collect()),
        }
    }
}

/// Columns `t,re_E,im_E,abs_E`.
pub fn write_series_csv<W: Write>(series: &TimeSeries, mut w: W) -> std::io::Result<()> {
    writeln!(w, "t,re_E,im_E,abs_E")?;
    for (t, e) in series.times.iter().zip(&series.e_field) {
        writeln!(w, "{t:.17e},{:.17e},{:.17e},{:.17e}", e.re, e.im, e.norm())?;
    }
    Ok(())
}

pub fn read_series_csv<R: BufRead>(r: R) -> Result<TimeSeries, OracleError> {
    let mut times = Vec::new();
    let mut e_field = Vec::new();
    for (n, line) in r.lines().enumerate() {
        let line = line.map_err(|e| OracleError::Io(e.to_string()))?;
        let line = line.trim();
        if n == 0 {
            if line != "t,re_E,im_E,abs_E" {
                return Err(OracleError::Parse {
                    line: 1,
                    reason: format!("unexpected header {line:?}"),
                });
            }
            continue;
        }
        if line.is_empty() {
            continue;
        }
        let cols: Vec<&str> = line.split(',').collect();
        if cols.len() != 4 {
            return Err(OracleError::Parse {
                line: n + 1,
                reason: format!("expected 4 columns, found {}", cols.len()),
            });
        }
        let parse = |s: &str| {
            s.trim().parse::<f64>().map_err(|e| OracleError::Parse {
                line: n + 1,
                reason: e.to_string(),
            })
        };
        times.push(parse(cols[0])?);
        e_field.push(Complex64::new(parse(cols[1])?, parse(cols[2])?));
    }
    crate::check_times(&times)?;
    Ok(TimeSeries {
        times,
        e_field,
        f_prime: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_round_trip_is_exact() {
        let s = TimeSeries {
            times: vec![0.0, 0.05, 0.1],
            e_field: vec![Complex64::new(0.0, 2.5), Complex64::new(1e-17, -0.3), Complex64::new(-0.1, 1.0 / 3.0)],
            f_prime: None,
        };
        let mut buf = Vec::new();
        write_series_csv(&s, &mut buf).unwrap();
        let back = read_series_csv(&buf[..]).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn bad_header_is_reported() {
        let err = read_series_csv("time,E\n".as_bytes()).unwrap_err();
        assert!(matches!(err, OracleError::Parse { line: 1, .. }));
    }
}
