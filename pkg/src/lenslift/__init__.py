"""Links in lens spaces, their lifts to the 3-sphere, and invariants of the lifts."""
