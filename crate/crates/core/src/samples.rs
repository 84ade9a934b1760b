//! Small fixed tables used in tests, examples and the acceptance suite.

use crate::permgroup::{GroupTable, Perm, PermGroup};
use crate::rightloop::RightLoop;

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

/// Order-5 right loop on labels `1..=5` (identity `1`) with unique inverses.
/// It is a twisted right gyrogroup whose inner mapping group is `A_4`, and
/// it is not a loop.
pub fn order5_trg() -> RightLoop {
    let raw = [
        [1, 2, 3, 4, 5],
        [2, 3, 1, 3, 3],
        [3, 1, 2, 2, 2],
        [4, 4, 4, 1, 4],
        [5, 5, 5, 5, 1],
    ];
    let rows: Vec<Vec<usize>> = raw.iter().map(|r| r.iter().map(|v| v - 1).collect()).collect();
    RightLoop::validate_table(&rows, 0, labels(&["1", "2", "3", "4", "5"]))
        .expect("fixed table is a right loop")
}

/// Order-3 right loop where `1' ∘ 1 = e` but `1 ∘ 1' ≠ e`.
pub fn one_sided_inverse_loop() -> RightLoop {
    RightLoop::validate_table(&[vec![0, 1, 2], vec![1, 2, 1], vec![2, 0, 0]], 0, vec![])
        .expect("fixed table is a right loop")
}

/// `Z_n` as a right loop.
pub fn cyclic_loop(n: usize) -> RightLoop {
    RightLoop::from_group(&GroupTable::cyclic(n)).expect("groups are right loops")
}

/// Symmetric group on `k` points as an abstract table.
pub fn symmetric_group(k: usize) -> GroupTable {
    let mut gens = Vec::new();
    if k >= 2 {
        gens.push(Perm::from_cycles(k, &[vec![0, 1]]).unwrap());
        gens.push(Perm::from_cycles(k, &[(0..k).collect()]).unwrap());
    }
    let point_labels: Vec<String> = (1..=k).map(|i| i.to_string()).collect();
    PermGroup::close_with_cap(k, &gens, usize::MAX)
        .expect("uncapped")
        .to_table(&point_labels)
}

/// Dihedral group of order `2k` as an abstract table (`k ≥ 3`).
pub fn dihedral_group(k: usize) -> GroupTable {
    let rot = Perm::from_cycles(k, &[(0..k).collect()]).unwrap();
    let refl = Perm::from_images(&(0..k).map(|i| (k - i) % k).collect::<Vec<_>>()).unwrap();
    let point_labels: Vec<String> = (1..=k).map(|i| i.to_string()).collect();
    PermGroup::close(k, &[rot, refl]).expect("small").to_table(&point_labels)
}

/// Quaternion group `Q_8`, elements `±1, ±i, ±j, ±k`.
pub fn quaternion_group() -> GroupTable {
    // unit u ∈ {1,i,j,k} as 0..4, sign bit s; id = 2u + s
    const UNIT: [[(usize, bool); 4]; 4] = [
        [(0, false), (1, false), (2, false), (3, false)],
        [(1, false), (0, true), (3, false), (2, true)],
        [(2, false), (3, true), (0, true), (1, false)],
        [(3, false), (2, false), (1, true), (0, true)],
    ];
    let mut rows = vec![vec![0; 8]; 8];
    for a in 0..8 {
        for b in 0..8 {
            let (u, neg) = UNIT[a / 2][b / 2];
            let sign = (a % 2 == 1) ^ (b % 2 == 1) ^ neg;
            rows[a][b] = 2 * u + sign as usize;
        }
    }
    let names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"];
    GroupTable::new(&rows, labels(&names)).expect("Q8 table")
}

/// Alternating group on `k` points as an abstract table (`k ≥ 3`).
pub fn alternating_group(k: usize) -> GroupTable {
    let gens: Vec<Perm> = (2..k)
        .map(|i| Perm::from_cycles(k, &[vec![0, 1, i]]).unwrap())
        .collect();
    let point_labels: Vec<String> = (1..=k).map(|i| i.to_string()).collect();
    PermGroup::close_with_cap(k, &gens, usize::MAX)
        .expect("uncapped")
        .to_table(&point_labels)
}
