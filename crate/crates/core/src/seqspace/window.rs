use super::vector::{IndexSchema, SymbolicVector};
use crate::conegeom::Subspace;
use crate::error::Result;
use crate::exactnum::{QVector, Rational};

/// Finite coordinate window: the first `depth` positions of every chain or
/// grid row plus its tail.
///
/// On vectors whose prefixes fit in the window, reading these coordinates is
/// an injective lattice homomorphism into `Q^N`, so order questions about a
/// span of such vectors can be answered in `Q^N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoordinateWindow {
    finite: usize,
    chain_depths: Vec<usize>,
    grid_depths: Vec<usize>,
}

impl CoordinateWindow {
    pub fn covering(schema: &IndexSchema, vs: &[SymbolicVector]) -> Self {
        let rows = vs.iter().map(|v| v.grid_rows().len()).max().unwrap_or(0);
        CoordinateWindow {
            finite: schema.finite_coords.len(),
            chain_depths: (0..schema.chains.len())
                .map(|c| vs.iter().map(|v| v.chains()[c].span_len()).max().unwrap_or(0))
                .collect(),
            grid_depths: (0..rows)
                .map(|r| vs.iter().map(|v| v.grid_row(r).span_len()).max().unwrap_or(0))
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.finite
            + self.chain_depths.iter().map(|d| d + 1).sum::<usize>()
            + self.grid_depths.iter().map(|d| d + 1).sum::<usize>()
    }

    pub fn labels(&self, schema: &IndexSchema) -> Vec<String> {
        let mut out: Vec<String> = schema.finite_coords.clone();
        for (spec, &d) in schema.chains.iter().zip(&self.chain_depths) {
            out.extend((0..d).map(|k| format!("{}[{k}]", spec.name)));
            out.push(format!("{}[tail]", spec.name));
        }
        let gname = schema.grid.as_ref().map_or("grid", |g| g.name.as_str());
        for (r, &d) in self.grid_depths.iter().enumerate() {
            out.extend((0..d).map(|k| format!("{gname}[{r},{k}]")));
            out.push(format!("{gname}[{r},tail]"));
        }
        out
    }

    pub fn embed(&self, v: &SymbolicVector) -> QVector {
        let mut out: Vec<Rational> = v.finite_part().to_vec();
        for (c, &d) in v.chains().iter().zip(&self.chain_depths) {
            out.extend((0..d).map(|k| c.at(k).clone()));
            out.push(c.tail().clone());
        }
        for (r, &d) in self.grid_depths.iter().enumerate() {
            let row = v.grid_row(r);
            out.extend((0..d).map(|k| row.at(k).clone()));
            out.push(row.tail().clone());
        }
        QVector::from(out)
    }

    pub fn fits(&self, v: &SymbolicVector) -> bool {
        v.chains().iter().zip(&self.chain_depths).all(|(c, &d)| c.span_len() <= d)
            && v.grid_rows().len() <= self.grid_depths.len()
            && v.grid_rows().iter().zip(&self.grid_depths).all(|(r, &d)| r.span_len() <= d)
    }

    /// Span of `vs` as a subspace of the window coordinates.
    pub fn span(&self, vs: &[SymbolicVector]) -> Result<Subspace> {
        let embedded: Vec<QVector> = vs.iter().map(|v| self.embed(v)).collect();
        Subspace::span(self.dim(), &embedded)
    }
}
