# Copyright 2024 mlbalance contributors. All Rights Reserved.
# Use of this source code is governed by a MIT license that can be found in the LICENSE file.
# SPDX-License-Identifier: MIT

from .activations import (
    DEFAULT_LEAKY_SLOPE,
    leaky_relu,
    leaky_relu_grad,
    sigmoid,
    sigmoid_grad,
)
from .layers import (
    DenseLayer,
    ParamGradients,
    dense_forward,
    init_params,
    layer_to_dict,
    layer_from_dict,
)
from .adam import AdamState, adam_init, adam_step
from .gradcheck import LossFn, grad_check
