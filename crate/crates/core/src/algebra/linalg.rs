use super::Field;

/// Basis of the right nullspace of `rows` (each of length `ncols`), via
/// reduced row echelon form. Basis vectors have a 1 in their free column.
pub fn nullspace<F: Field>(rows: &[Vec<F>], ncols: usize) -> Vec<Vec<F>> {
    let mut m: Vec<Vec<F>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inverse().expect("nonzero pivot");
        for x in m[r].iter_mut() {
            *x = x.times(&inv);
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..ncols {
                    let t = f.times(&m[r][j]);
                    m[i][j] = m[i][j].minus(&t);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![F::zero(); ncols];
            v[f] = F::one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = m[i][f].negated();
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Rational;

    fn q(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from(x)).collect()
    }

    #[test]
    fn small_nullspaces() {
        let ns = nullspace(&[q(&[1, 2, 3]), q(&[2, 4, 6])], 3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            let dot: Rational = v.iter().zip(q(&[1, 2, 3])).map(|(a, b)| a * &b).fold(Rational::from(0), |s, t| s + t);
            assert_eq!(dot, Rational::from(0));
        }
        assert!(nullspace(&[q(&[1, 0]), q(&[0, 1])], 2).is_empty());
        assert_eq!(nullspace::<Rational>(&[], 2).len(), 2);
    }
}
