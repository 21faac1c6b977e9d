#ifndef ELPS_TEST_FIXTURES_HPP
#define ELPS_TEST_FIXTURES_HPP

// named programs used across the test suites
namespace fixtures {

inline constexpr const char* kSch1 =
    "eligible :- highGPA.  ineligible :- lowGPA.  :- eligible, ineligible.\n"
    "interview :- not eligible, not ineligible.  lowGPA | highGPA.\n";

inline constexpr const char* kSch2 =
    "eligible_mike :- highGPA_mike.  ineligible_mike :- lowGPA_mike.\n"
    ":- eligible_mike, ineligible_mike.\n"
    "interview_mike :- not eligible_mike, not ineligible_mike.\n"
    "lowGPA_mike | highGPA_mike.\n"
    "eligible_mark :- highGPA_mark.  ineligible_mark :- lowGPA_mark.\n"
    ":- eligible_mark, ineligible_mark.\n"
    "interview_mark :- not eligible_mark, not ineligible_mark.\n"
    "lowGPA_mark | highGPA_mark.\n";

inline constexpr const char* kLoop = "a :- not a.";
inline constexpr const char* kEmpty = "";
inline constexpr const char* kChoice = "a | b.";

// two rule groups sharing atom c through mixed epistemic and plain occurrences
inline constexpr const char* kSharing = "c :- not d.  b :- not c, not e.";

}  // namespace fixtures

#endif
