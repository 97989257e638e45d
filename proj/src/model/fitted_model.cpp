#include "windlasso/model/fitted_model.hpp"

#include "windlasso/core/errors.hpp"

namespace windlasso {

const FittedEquation& FittedModel::equation(VariableRef target) const {
    const int idx = column_of(target, station_count);
    if (idx < 0 || idx >= equation_count()) {
        throw InvalidValueError("no equation for " + to_string(target));
    }
    return equations[static_cast<std::size_t>(idx)];
}

FittedEquation& FittedModel::equation(VariableRef target) {
    return const_cast<FittedEquation&>(static_cast<const FittedModel&>(*this).equation(target));
}

}  // namespace windlasso
