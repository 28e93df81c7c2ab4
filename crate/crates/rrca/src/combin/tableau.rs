//! Standard tableaux on multipartitions: validation, per-entry box data
//! (content and component), and exhaustive enumeration by box removal.

use super::{CombinError, DiagramBox, Multipartition};

/// A standard tableau: a bijective filling of the diagram of `shape` with
/// 1..n, row increasing and column increasing within every component.
/// `boxes[i-1]` is the box T(i).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardTableau {
    shape: Multipartition,
    boxes: Vec<DiagramBox>,
}

impl StandardTableau {
    pub fn new(shape: Multipartition, boxes: Vec<DiagramBox>) -> Result<Self, CombinError> {
        let n = shape.size();
        if boxes.len() != n {
            return Err(CombinError::InvalidTableau(format!(
                "{} entries for a diagram of {} boxes",
                boxes.len(),
                n
            )));
        }
        // entry grid per component, 0 meaning unfilled
        let mut grids: Vec<Vec<Vec<usize>>> = shape
            .components()
            .iter()
            .map(|p| p.parts().iter().map(|&len| vec![0; len as usize]).collect())
            .collect();
        for (i, b) in boxes.iter().enumerate() {
            if !shape.contains(b) {
                return Err(CombinError::InvalidTableau(format!(
                    "entry {} placed outside the diagram",
                    i + 1
                )));
            }
            let cell = &mut grids[b.component][b.row as usize - 1][b.col as usize - 1];
            if *cell != 0 {
                return Err(CombinError::InvalidTableau(format!(
                    "box ({}, {}, {}) filled twice",
                    b.component, b.row, b.col
                )));
            }
            *cell = i + 1;
        }
        for grid in &grids {
            for r in 0..grid.len() {
                for c in 0..grid[r].len() {
                    let v = grid[r][c];
                    if c + 1 < grid[r].len() && grid[r][c + 1] <= v {
                        return Err(CombinError::InvalidTableau(
                            "rows must strictly increase".into(),
                        ));
                    }
                    if r + 1 < grid.len() && c < grid[r + 1].len() && grid[r + 1][c] <= v {
                        return Err(CombinError::InvalidTableau(
                            "columns must strictly increase".into(),
                        ));
                    }
                }
            }
        }
        Ok(StandardTableau { shape, boxes })
    }

    pub fn shape(&self) -> &Multipartition {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.boxes.len()
    }

    pub fn entries(&self) -> &[DiagramBox] {
        &self.boxes
    }

    /// The box T(i), 1-based.
    pub fn entry_box(&self, i: usize) -> Result<&DiagramBox, CombinError> {
        if i == 0 || i > self.boxes.len() {
            return Err(CombinError::EntryOutOfRange { i, n: self.boxes.len() });
        }
        Ok(&self.boxes[i - 1])
    }

    /// (ct(T(i)), beta(T(i))) for entry i.
    pub fn box_data(&self, i: usize) -> Result<(i64, usize), CombinError> {
        let b = self.entry_box(i)?;
        Ok((b.content(), b.component))
    }

    /// The row-reading tableau: components in order, rows left to right.
    /// Row-major filling of each component is always standard.
    pub fn row_reading(shape: &Multipartition) -> StandardTableau {
        let mut boxes = Vec::with_capacity(shape.size());
        for b in shape.boxes() {
            boxes.push(b);
        }
        StandardTableau { shape: shape.clone(), boxes }
    }
}

/// All standard tableaux on the shape, in the deterministic order given by
/// choosing the box of n, then n-1, ... with candidate corners ordered by
/// (component, row). The empty shape has exactly one (empty) tableau.
pub fn enumerate_standard_tableaux(shape: &Multipartition) -> Vec<StandardTableau> {
    let n = shape.size();
    let mut rows: Vec<Vec<u32>> = shape
        .components()
        .iter()
        .map(|p| p.parts().to_vec())
        .collect();
    let mut placement = vec![DiagramBox { component: 0, row: 0, col: 0 }; n];
    let mut out = Vec::new();

    fn removable_corners(rows: &[Vec<u32>]) -> Vec<DiagramBox> {
        let mut corners = Vec::new();
        for (comp, parts) in rows.iter().enumerate() {
            for r in 0..parts.len() {
                if parts[r] >= 1 && (r + 1 == parts.len() || parts[r + 1] < parts[r]) {
                    corners.push(DiagramBox {
                        component: comp,
                        row: r as u32 + 1,
                        col: parts[r],
                    });
                }
            }
        }
        corners
    }

    fn rec(
        rows: &mut Vec<Vec<u32>>,
        k: usize,
        placement: &mut Vec<DiagramBox>,
        shape: &Multipartition,
        out: &mut Vec<StandardTableau>,
    ) {
        if k == 0 {
            out.push(StandardTableau { shape: shape.clone(), boxes: placement.clone() });
            return;
        }
        for corner in removable_corners(rows) {
            placement[k - 1] = corner;
            let comp = corner.component;
            let r = corner.row as usize - 1;
            rows[comp][r] -= 1;
            let popped = rows[comp][r] == 0;
            if popped {
                rows[comp].pop();
            }
            rec(rows, k - 1, placement, shape, out);
            if popped {
                rows[comp].push(0);
            }
            rows[comp][r] += 1;
        }
    }

    rec(&mut rows, n, &mut placement, shape, &mut out);
    out
}
