// Copyright 2026 The dowtrend Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DOWTREND_NORMAL_H_
#define DOWTREND_NORMAL_H_

namespace dowtrend {

// Standard normal CDF, evaluated as 0.5 * erfc(-x / sqrt(2)) with the C
// library's complementary error function. Absolute error is at the level of
// double rounding (well below 1e-7) and the lower tail keeps full relative
// precision down to about x = -37.
double normal_cdf(double x);

double normal_pdf(double x);

}  // namespace dowtrend

#endif  // DOWTREND_NORMAL_H_
