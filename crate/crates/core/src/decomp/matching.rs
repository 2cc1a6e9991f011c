/// Perfect matching in a bipartite graph given by `adjacency[row] =
/// columns`, found with augmenting paths (Kuhn's algorithm). Rows and
/// columns are tried in index order and a row takes a free column before
/// displacing another row, so the result is deterministic.
///
/// Returns `match_of_row` with `match_of_row[i] = j`, or `None` when no
/// perfect matching exists.
pub(crate) fn perfect_matching(adjacency: &[Vec<usize>]) -> Option<Vec<usize>> {
    let n = adjacency.len();
    let mut row_of_col: Vec<Option<usize>> = vec![None; n];
    for row in 0..n {
        let mut visited = vec![false; n];
        if !augment(row, adjacency, &mut visited, &mut row_of_col) {
            return None;
        }
    }
    let mut match_of_row = vec![0; n];
    for (col, row) in row_of_col.into_iter().enumerate() {
        match_of_row[row?] = col;
    }
    Some(match_of_row)
}

fn augment(
    row: usize,
    adjacency: &[Vec<usize>],
    visited: &mut [bool],
    row_of_col: &mut [Option<usize>],
) -> bool {
    if let Some(&col) = adjacency[row].iter().find(|&&c| row_of_col[c].is_none()) {
        visited[col] = true;
        row_of_col[col] = Some(row);
        return true;
    }
    for &col in &adjacency[row] {
        if visited[col] {
            continue;
        }
        visited[col] = true;
        let free = match row_of_col[col] {
            None => true,
            Some(other) => augment(other, adjacency, visited, row_of_col),
        };
        if free {
            row_of_col[col] = Some(row);
            return true;
        }
    }
    false
}
