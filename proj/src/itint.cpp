#include "dissect/itint.hpp"

#include <sstream>

namespace dissect {

std::string ItIntSymbol::str() const {
    std::ostringstream os;
    os << "I(" << a0.str() << ";";
    for (size_t i = 0; i < word.size(); ++i) os << (i ? "," : "") << word[i].str();
    os << ";" << a_end.str() << ")";
    return os.str();
}

std::string FormalSum::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [s, c] : terms_) {
        if (c >= 0 && !first) os << " + ";
        if (c < 0) os << (first ? "-" : " - ");
        long long a = c < 0 ? -c : c;
        if (a != 1) os << a << "·";
        os << s.str();
        first = false;
    }
    return os.str();
}

std::string JSymbol::str() const {
    std::ostringstream os;
    os << "J(";
    for (size_t i = 0; i < word.size(); ++i) os << (i ? "," : "") << word[i].str();
    os << ";" << b.str() << ")";
    return os.str();
}

} // namespace dissect
