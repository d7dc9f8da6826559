#![no_main]

use cookquest::corpus::IngredientGraph;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|text: &str| {
    if let Ok(g) = IngredientGraph::from_text(text) {
        let again = IngredientGraph::from_text(&g.to_text()).expect("written graph reads back");
        assert_eq!(again, g);
        assert_eq!(g.total_ordered_weight(), 2 * g.edges().map(|(_, _, w)| u64::from(w)).sum::<u64>());
    }
});
