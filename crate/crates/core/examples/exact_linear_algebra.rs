//! Rank, kernel and linear solves over the rationals and over GF(7).

use moritakit::exactlin::{Field, Matrix};

fn main() -> moritakit::Result<()> {
    let rows: &[&[i64]] = &[&[1, 2, 3, 4], &[2, 4, 6, 8], &[1, 0, 7, 1]];
    for field in [Field::Rationals, Field::prime(7)?] {
        let m = Matrix::from_i64(field, rows);
        let r = m.rref();
        println!("over {field}: rank {}, pivots {:?}", r.rank, r.pivots);
        println!("  kernel dimension {}", m.kernel().dim());
        let rhs = Matrix::from_i64(field, &[&[1], &[2], &[0]]);
        match m.solve(&rhs)? {
            Some(x) => {
                let xs: Vec<String> = x.column(0).iter().map(|s| s.to_string()).collect();
                println!("  a solution of m x = (1, 2, 0): [{}]", xs.join(", "));
            }
            None => println!("  m x = (1, 2, 0) has no solution"),
        }
    }

    // Hilbert matrices have exact rational inverses with large entries.
    let q = Field::Rationals;
    let n = 6;
    let h = Matrix::from_rows(
        q,
        n,
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| q.parse(&format!("1/{}", i + j + 1)).unwrap())
                    .collect()
            })
            .collect(),
    );
    let inv = h.inverse().expect("Hilbert matrices are invertible");
    println!("H6^-1 [5][5] = {}", inv.row(5)[5]);
    assert!(h.mul(&inv).is_identity());
    Ok(())
}
