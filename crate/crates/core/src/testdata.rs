use crate::table::RackTable;

/// The 7-point kei built from E = [[0,1,0],[1,0,1],[1,0,0]].
pub(crate) fn golden_kei() -> RackTable {
    RackTable::from_rows(&[
        vec![1, 1, 2, 2, 1, 1, 1],
        vec![2, 2, 1, 1, 2, 2, 2],
        vec![4, 4, 3, 3, 4, 4, 3],
        vec![3, 3, 4, 4, 3, 3, 4],
        vec![6, 6, 5, 5, 5, 5, 5],
        vec![5, 5, 6, 6, 6, 6, 6],
        vec![7, 7, 7, 7, 7, 7, 7],
    ])
    .unwrap()
}
