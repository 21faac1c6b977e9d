#ifndef ELPS_REDUCTS_HPP
#define ELPS_REDUCTS_HPP

#include "elps/program.hpp"

namespace elps {

/// Epistemic reduct of `p` w.r.t. CWI `i`: every epistemic literal `not l`
/// becomes `~l` when l is held true by `i`, and vanishes (is replaced by a
/// true constant) otherwise; a negated true constant falsifies the body and
/// deletes the rule. Triple negation collapses to single negation.
///
/// `i` must assign a value to every atom of elit(p); other atoms are ignored.
/// Throws ScopeError on an unset epistemic atom.
PlainProgram epistemic_reduct(const Program& p, const Cwi& i);

/// GL-reduct of a plain program w.r.t. interpretation `m`: a rule survives
/// with its positive body iff every negated body element is consistent with
/// `m` (i.e. ~a needs a ∉ m, ~~a needs a ∈ m).
PlainProgram gl_reduct(const PlainProgram& p, const AtomSet& m);

bool satisfies(const AtomSet& m, const PlainRule& r);
bool satisfies(const AtomSet& m, const PlainProgram& p);

/// Classical model check on ELP rules that happen to contain no epistemic
/// literals. Throws ScopeError when an epistemic literal is encountered.
bool satisfies(const AtomSet& m, const Rule& r);
bool satisfies(const AtomSet& m, const Program& p);

}  // namespace elps

#endif
