use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Subspace};

/// Radical of an algebra as the kernel of `(x, y) ↦ Tr(L_{xy})` on the regular
/// representation.
pub fn trace_form_radical(a: &Algebra) -> Result<Subspace> {
    let field = a.field();
    let n = a.dim();
    if !field.trace_form_ok(n) {
        return Err(Error::UnsupportedCharacteristic {
            characteristic: field.characteristic(),
            bound: n,
            what: "radical via trace form",
        });
    }
    // t_m = Tr(L_{b_m}) = Σ_j c[m][j][j]
    let t: Vec<_> = (0..n)
        .map(|m| {
            let mut s = field.zero();
            for j in 0..n {
                for (k, c) in a.product(m, j) {
                    if *k == j {
                        s += c;
                    }
                }
            }
            s
        })
        .collect();
    let mut g = Matrix::zeros(field, n, n);
    for i in 0..n {
        for j in 0..n {
            let mut s = field.zero();
            for (k, c) in a.product(i, j) {
                s.add_product(c, &t[*k]);
            }
            g[(i, j)] = s;
        }
    }
    Ok(g.kernel())
}
