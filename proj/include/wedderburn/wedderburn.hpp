#pragma once

#include "wedderburn/error.hpp"
#include "wedderburn/numtheory.hpp"
#include "wedderburn/prime_field.hpp"
#include "wedderburn/poly.hpp"
#include "wedderburn/linalg.hpp"
#include "wedderburn/cyclotomic.hpp"
#include "wedderburn/finite_field.hpp"
#include "wedderburn/field_spec.hpp"
#include "wedderburn/group.hpp"
#include "wedderburn/catalog.hpp"
#include "wedderburn/char_table.hpp"
#include "wedderburn/algebra.hpp"
#include "wedderburn/f_theory.hpp"
#include "wedderburn/oracle.hpp"
#include "wedderburn/structure.hpp"
#include "wedderburn/berman.hpp"
#include "wedderburn/report.hpp"
#include "wedderburn/verify.hpp"
