use arithmat::exact_lattice::{
    hermite, hom_count_to_cyclic, integer_kernel, lattice_index, pushout, snf, FgAbGroup, GroupMap, IntMatrix,
    LatticeIndex, SubLattice,
};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn arb_matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = IntMatrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        proptest::collection::vec(-6i64..=6, r * c).prop_map(move |e| {
            let rows: Vec<Vec<i64>> = e.chunks(c).map(<[i64]>::to_vec).collect();
            IntMatrix::from_rows(&rows)
        })
    })
}

// cofactor expansion on i128, independent of the library's determinant
fn det_naive(m: &[Vec<i128>]) -> i128 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        n => (0..n)
            .map(|j| {
                let minor: Vec<Vec<i128>> =
                    m[1..].iter().map(|row| row.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &v)| v).collect()).collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] * det_naive(&minor)
            })
            .sum(),
    }
}

fn to_i128(m: &IntMatrix) -> Vec<Vec<i128>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(|v| i128::try_from(v).unwrap()).collect())
        .collect()
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|b| b.count_ones() as usize == k)
        .map(|b| (0..n).filter(|i| b >> i & 1 == 1).collect())
        .collect()
}

fn gcd_minors_naive(m: &[Vec<i128>], k: usize) -> i128 {
    let mut g = 0i128;
    for rows in subsets_of_size(m.len(), k) {
        for cols in subsets_of_size(m[0].len(), k) {
            let sub: Vec<Vec<i128>> = rows.iter().map(|&r| cols.iter().map(|&c| m[r][c]).collect()).collect();
            g = g.gcd(&det_naive(&sub));
        }
    }
    g
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn hermite_form_shape(m in arb_matrix(4, 5)) {
        let h = hermite(&m);
        prop_assert_eq!(&(&m * &h.u), &h.h);
        prop_assert_eq!(det_naive(&to_i128(&h.u)).abs(), 1);
        let mut last = None;
        for (j, &p) in h.pivots.iter().enumerate() {
            prop_assert!(last.is_none_or(|l| p > l));
            last = Some(p);
            prop_assert!(h.h[(p, j)].is_positive());
            for i in 0..p {
                prop_assert!(h.h[(i, j)].is_zero());
            }
            for k in 0..j {
                prop_assert!(!h.h[(p, k)].is_negative() && h.h[(p, k)] < h.h[(p, j)]);
            }
        }
        for j in h.rank()..m.cols() {
            prop_assert!(h.h.is_column_zero(j));
        }
    }

    #[test]
    fn smith_form_matches_minors(m in arb_matrix(4, 4)) {
        let (s, u, v) = snf(&m);
        prop_assert_eq!(&(&(&u * &m) * &v), &s);
        prop_assert_eq!(det_naive(&to_i128(&u)).abs(), 1);
        prop_assert_eq!(det_naive(&to_i128(&v)).abs(), 1);
        let mi = to_i128(&m);
        let mut prod = 1i128;
        for k in 0..m.rows().min(m.cols()) {
            for i in 0..s.rows() {
                for j in 0..s.cols() {
                    if i != j {
                        prop_assert!(s[(i, j)].is_zero());
                    }
                }
            }
            let d = i128::try_from(&s[(k, k)]).unwrap();
            prop_assert!(d >= 0);
            if k > 0 {
                let prev = i128::try_from(&s[(k - 1, k - 1)]).unwrap();
                prop_assert!(d == 0 || (prev != 0 && d % prev == 0));
            }
            prod *= d;
            prop_assert_eq!(prod, gcd_minors_naive(&mi, k + 1));
        }
    }

    #[test]
    fn kernel_is_saturated_and_complete(m in arb_matrix(3, 5)) {
        let k = integer_kernel(&m);
        prop_assert!((&m * &k).is_zero());
        prop_assert_eq!(k.cols(), m.cols() - m.rank());
        let l = SubLattice::new(k);
        prop_assert_eq!(&l.saturate(), &l);
    }

    #[test]
    fn full_rank_index_is_determinant(m in arb_matrix(3, 3)) {
        prop_assume!(m.rows() == m.cols());
        let d = det_naive(&to_i128(&m));
        let idx = lattice_index(&SubLattice::full(m.rows()), &SubLattice::new(m)).unwrap();
        if d == 0 {
            prop_assert_eq!(idx, LatticeIndex::Infinite);
        } else {
            prop_assert_eq!(idx, LatticeIndex::Finite(BigInt::from(d.abs())));
        }
    }

    #[test]
    fn pushout_universal_property(a in 0u64..6, b in 1u64..7, c in 1u64..7, x in 0i64..7, y in 0i64..7, n in 1u64..9) {
        // span Z/b <- Z/a -> Z/c, where a = 0 means Z
        let (ga, gb, gc) = (FgAbGroup::new(usize::from(a == 0), if a == 0 { vec![] } else { vec![BigInt::from(a)] }), FgAbGroup::cyclic(b), FgAbGroup::cyclic(c));
        let (pa, pb, pc) = (ga.presentation(), gb.presentation(), gc.presentation());
        prop_assume!(pa.gens() == 1 && pb.gens() == 1 && pc.gens() == 1);
        let f = GroupMap::new(pa.clone(), pb.clone(), IntMatrix::from_rows(&[[x]]));
        let g = GroupMap::new(pa, pc.clone(), IntMatrix::from_rows(&[[y]]));
        prop_assume!(f.is_ok() && g.is_ok());
        let p = pushout(&f.unwrap(), &g.unwrap()).unwrap();
        // pairs (u, v) of homs Z/b -> Z/n, Z/c -> Z/n agreeing on the image of Z/a
        let n = n as i64;
        let (b, c) = (b as i64, c as i64);
        let mut count = 0u64;
        for u in 0..n {
            for v in 0..n {
                if (u * b) % n == 0 && (v * c) % n == 0 && (u * x - v * y).rem_euclid(n) == 0 {
                    count += 1;
                }
            }
        }
        prop_assert_eq!(hom_count_to_cyclic(&p.group, n as u64), BigInt::from(count));
    }
}
