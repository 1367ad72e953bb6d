//! Runs every example's `main` so the examples stay compiling and panic-free.

#[path = "../examples/free_words.rs"]
mod free_words;

#[path = "../examples/automorphisms.rs"]
mod automorphisms;

#[path = "../examples/relation_tables.rs"]
mod relation_tables;

#[path = "../examples/action_table.rs"]
mod action_table;

#[path = "../examples/lpresentation.rs"]
mod lpresentation;

#[path = "../examples/abelianization_rank.rs"]
mod abelianization_rank;

#[path = "../examples/johnson.rs"]
mod johnson;

#[path = "../examples/pairing.rs"]
mod pairing;

#[path = "../examples/distinct_images.rs"]
mod distinct_images;

#[test]
fn free_words_runs() {
    free_words::main();
}

#[test]
fn automorphisms_runs() {
    automorphisms::main();
}

#[test]
fn relation_tables_runs() {
    relation_tables::main();
}

#[test]
fn action_table_runs() {
    action_table::main();
}

#[test]
fn lpresentation_runs() {
    lpresentation::main();
}

#[test]
fn abelianization_rank_runs() {
    abelianization_rank::main();
}

#[test]
fn johnson_runs() {
    johnson::main();
}

#[test]
fn pairing_runs() {
    pairing::main();
}

#[test]
fn distinct_images_runs() {
    distinct_images::main();
}
