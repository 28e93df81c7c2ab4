//! Integer linear forms in the free parameters kappa, H_1..H_{m-1}, used as
//! exponents in generic-symbolic mode. A form compares componentwise, so
//! multisets of forms have a well-defined canonical order.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LinearExponent {
    /// Coefficient of kappa.
    pub kappa: i64,
    /// Coefficients of H_1..H_{m-1}, fixed length m-1.
    pub h: Vec<i64>,
}

impl LinearExponent {
    pub fn zero(m: usize) -> Self {
        LinearExponent { kappa: 0, h: vec![0; m.saturating_sub(1)] }
    }

    pub fn is_zero(&self) -> bool {
        self.kappa == 0 && self.h.iter().all(|&x| x == 0)
    }
}

impl fmt::Display for LinearExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut pieces: Vec<String> = Vec::new();
        if self.kappa != 0 {
            pieces.push(match self.kappa {
                1 => "kappa".to_string(),
                -1 => "-kappa".to_string(),
                k => format!("{k}*kappa"),
            });
        }
        for (j, &c) in self.h.iter().enumerate() {
            if c != 0 {
                pieces.push(match c {
                    1 => format!("H{}", j + 1),
                    -1 => format!("-H{}", j + 1),
                    c => format!("{c}*H{}", j + 1),
                });
            }
        }
        if pieces.is_empty() {
            return write!(f, "0");
        }
        let mut out = pieces[0].clone();
        for p in &pieces[1..] {
            if let Some(stripped) = p.strip_prefix('-') {
                out.push('-');
                out.push_str(stripped);
            } else {
                out.push('+');
                out.push_str(p);
            }
        }
        write!(f, "{out}")
    }
}

impl fmt::Debug for LinearExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
